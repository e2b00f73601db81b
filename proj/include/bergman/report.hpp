#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "bergman/criteria.hpp"
#include "bergman/weights.hpp"

#include <json.hpp>

namespace bergman::report {

// 12 significant digits; infinities spelled out for diffable output
std::string fmt12(double v);

std::string csv_escape(const std::string& s);

class CsvWriter {
  public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}
    void row(const std::vector<std::string>& cells);

  private:
    std::ostream& os_;
};

nlohmann::json to_json(const weights::WeightClassReport& rep);
nlohmann::json to_json(const criteria::CriterionReport& rep);

void write_file(const std::string& path, const std::string& contents);

} // namespace bergman::report
