#ifndef NANOBAN_REPORT_HPP
#define NANOBAN_REPORT_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace nanoban {

struct CheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CheckReport {
    std::string title;
    std::vector<CheckItem> items;
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string detail = "") {
        items.push_back({std::move(name), pass, std::move(detail)});
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& i : items) n += !i.pass;
        return n;
    }
    bool all_pass() const { return failures() == 0; }
};

} // namespace nanoban

#endif
