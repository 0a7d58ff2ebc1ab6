#pragma once

#include <codelab/matrix.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace codelab {

struct DemoCheck {
    std::string name;
    nlohmann::json expected, got;
    bool ok() const { return expected == got; }
};

struct DemoReport {
    std::string example;
    std::string source; // the worked example being replayed
    std::vector<DemoCheck> checks;
    nlohmann::json result; // headline values
    bool ok() const;
};

const std::vector<std::string>& demo_names();
// throws InvalidArgument for an unknown name
DemoReport run_demo(const std::string& name);

nlohmann::json to_json(const DemoReport& r);
std::string to_human(const DemoReport& r);

// "(2,0,0,4)" and one such tuple per matrix row
std::string tuple_string(const Field& f, const Vec& v);
nlohmann::json rows_json(const Matrix& m);

}
