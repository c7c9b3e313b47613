#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

// File fixtures shared between the ingest and CLI tests. The two-author
// citation vectors match oracles.hpp::author_{a,b}_counts().

namespace fixture {

inline const char* pair_authors_file() {
    return R"({"format":"picite-authors","version":1,"cohort":"pair"}
{"author_id":"A","name":"Author A","papers":[{"paper_id":"A-1","citation_count":29},{"paper_id":"A-2","citation_count":24},{"paper_id":"A-3","citation_count":20},{"paper_id":"A-4","citation_count":17},{"paper_id":"A-5","citation_count":15},{"paper_id":"A-6","citation_count":14},{"paper_id":"A-7","citation_count":13},{"paper_id":"A-8","citation_count":12},{"paper_id":"A-9","citation_count":11},{"paper_id":"A-10","citation_count":10},{"paper_id":"A-11","citation_count":9},{"paper_id":"A-12","citation_count":3},{"paper_id":"A-13","citation_count":0}]}
{"author_id":"B","name":"Author B","papers":[{"paper_id":"B-1","citation_count":29},{"paper_id":"B-2","citation_count":24},{"paper_id":"B-3","citation_count":20},{"paper_id":"B-4","citation_count":17},{"paper_id":"B-5","citation_count":15},{"paper_id":"B-6","citation_count":14},{"paper_id":"B-7","citation_count":13},{"paper_id":"B-8","citation_count":12},{"paper_id":"B-9","citation_count":11},{"paper_id":"B-10","citation_count":10},{"paper_id":"B-11","citation_count":2},{"paper_id":"B-12","citation_count":1},{"paper_id":"B-13","citation_count":1},{"paper_id":"B-14","citation_count":1},{"paper_id":"B-15","citation_count":1},{"paper_id":"B-16","citation_count":1},{"paper_id":"B-17","citation_count":1},{"paper_id":"B-18","citation_count":1},{"paper_id":"B-19","citation_count":1},{"paper_id":"B-20","citation_count":1},{"paper_id":"B-21","citation_count":1},{"paper_id":"B-22","citation_count":0},{"paper_id":"B-23","citation_count":0},{"paper_id":"B-24","citation_count":0}]}
)";
}

inline const char* toy_graph_file() {
    return R"({"format":"picite-graph","version":1}
{"paper_id":"X","author_ids":["a"],"cited_paper_ids":[]}
{"paper_id":"Y","author_ids":["a"],"cited_paper_ids":["X"]}
{"paper_id":"Z","author_ids":["b"],"cited_paper_ids":["X"]}
)";
}

// Fresh scratch directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir() {
        static std::mt19937_64 rng(std::random_device{}());
        path_ = std::filesystem::temp_directory_path() /
                ("picite-test-" + std::to_string(rng()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

    std::filesystem::path write(const std::string& name, const std::string& text) const {
        const auto file = path_ / name;
        std::ofstream out(file, std::ios::binary);
        out << text;
        return file;
    }

    static std::string slurp(const std::filesystem::path& file) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

private:
    std::filesystem::path path_;
};

}  // namespace fixture
