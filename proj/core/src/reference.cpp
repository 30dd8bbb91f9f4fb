#include "rles/reference.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "rles/errors.hpp"

namespace rles {

namespace {

std::map<std::string, int> parse_mapping(const std::string& mapping) {
  std::map<std::string, int> out;
  std::istringstream in(mapping);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw config_error("bad column mapping entry '" + item +
                         "' (expected name:index)");
    const std::string name = item.substr(0, colon);
    int idx = 0;
    try {
      idx = std::stoi(item.substr(colon + 1));
    } catch (...) {
      throw config_error("bad column index in mapping entry '" + item + "'");
    }
    if (name.empty() || idx < 1)
      throw config_error("bad column mapping entry '" + item + "'");
    out[name] = idx;
  }
  if (!out.count("y"))
    throw config_error("column mapping must bind 'y' (got '" + mapping + "')");
  return out;
}

}  // namespace

ReferenceProfile load_reference_profiles(const std::string& path,
                                         const std::string& mapping) {
  const std::map<std::string, int> cols = parse_mapping(mapping);
  std::ifstream in(path);
  if (!in) throw io_error("cannot open reference file " + path);

  ReferenceProfile prof;
  prof.source = path;
  for (const auto& [name, _] : cols)
    if (name != "y") prof.columns[name];

  std::string line;
  int lineno = 0;
  int ncols = -1;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<double> row;
    bool comment = false;
    int colno = 0;
    while (ls >> tok) {
      ++colno;
      if (colno == 1 && (tok[0] == '%' || tok[0] == '#')) {
        comment = true;
        break;
      }
      try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        row.push_back(v);
      } catch (...) {
        throw io_error(path + ": non-numeric value '" + tok + "' at line " +
                       std::to_string(lineno) + ", column " +
                       std::to_string(colno));
      }
    }
    if (comment || row.empty()) continue;
    if (ncols < 0) ncols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != ncols)
      throw io_error(path + ": expected " + std::to_string(ncols) +
                     " columns but found " + std::to_string(row.size()) +
                     " on line " + std::to_string(lineno));
    for (const auto& [name, idx] : cols) {
      if (idx > ncols)
        throw config_error(path + ": mapping binds " + name + " to column " +
                           std::to_string(idx) + " but the file has only " +
                           std::to_string(ncols) + " columns");
      const double v = row[idx - 1];
      if (!std::isfinite(v))
        throw io_error(path + ": non-finite value for " + name + " on line " +
                       std::to_string(lineno));
      if (name == "y")
        prof.y.push_back(v);
      else
        prof.columns[name].push_back(v);
    }
  }
  if (prof.y.empty())
    throw io_error(path + ": no data rows (comments/blank lines only)");
  for (std::size_t i = 1; i < prof.y.size(); ++i)
    if (prof.y[i] <= prof.y[i - 1])
      throw io_error(path + ": y column is not strictly increasing at row " +
                     std::to_string(i + 1));
  return prof;
}

ComparisonReport compare_profiles(const std::vector<double>& y_run,
                                  const std::vector<double>& q_run,
                                  const ReferenceProfile& ref,
                                  const std::string& quantity) {
  const auto it = ref.columns.find(quantity);
  if (it == ref.columns.end()) {
    std::string have;
    for (const auto& [name, _] : ref.columns) have += ' ' + name;
    throw config_error("reference has no column '" + quantity +
                       "' (available:" + have + ")");
  }
  const std::vector<double>& qr = it->second;

  ComparisonReport rep;
  rep.quantity = quantity;
  double num2 = 0.0, den2 = 0.0, numi = 0.0, deni = 0.0;
  for (std::size_t p = 0; p < y_run.size(); ++p) {
    const double y = y_run[p];
    if (y < ref.y.front() || y > ref.y.back()) continue;
    const auto hi =
        std::lower_bound(ref.y.begin(), ref.y.end(), y) - ref.y.begin();
    double v;
    if (hi == 0) {
      v = qr.front();
    } else {
      const std::size_t a = hi - 1, b = hi;
      const double t = (y - ref.y[a]) / (ref.y[b] - ref.y[a]);
      v = (1.0 - t) * qr[a] + t * qr[b];
    }
    rep.y.push_back(y);
    rep.run_value.push_back(q_run[p]);
    rep.ref_value.push_back(v);
    const double d = q_run[p] - v;
    num2 += d * d;
    den2 += v * v;
    numi = std::max(numi, std::abs(d));
    deni = std::max(deni, std::abs(v));
  }
  if (rep.y.empty())
    throw config_error(
        "run and reference profiles have no overlap in the y range");
  rep.rel_l2 = den2 > 0.0 ? std::sqrt(num2 / den2) : std::sqrt(num2);
  rep.rel_linf = deni > 0.0 ? numi / deni : numi;
  return rep;
}

void write_comparison_csv(const ComparisonReport& rep,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  out << "y,run,reference\n";
  out.precision(12);
  for (std::size_t p = 0; p < rep.y.size(); ++p)
    out << rep.y[p] << ',' << rep.run_value[p] << ',' << rep.ref_value[p]
        << '\n';
}

}  // namespace rles
