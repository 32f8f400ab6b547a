#include "apmads/run_log.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "apmads/errors.hpp"

namespace apmads {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty numeric field");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw InvalidInput("malformed number '" + s + "'");
  return v;
}

namespace {

constexpr const char* kTail[] = {"f_inc", "sig_inc", "delta_p", "delta_m", "r", "p", "status",
                                 "cache_size"};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

std::string log_header(std::size_t dimension) {
  std::string h = "k,draws";
  for (std::size_t i = 1; i <= dimension; ++i) h += ",inc_" + std::to_string(i);
  for (const char* name : kTail) h += std::string(",") + name;
  return h;
}

void write_log(std::ostream& out, const std::vector<IterationRecord>& log, std::size_t dimension) {
  out << log_header(dimension) << '\n';
  for (const auto& rec : log) {
    out << rec.k << ',' << format_double(rec.draws);
    for (double c : rec.incumbent.coords()) out << ',' << format_double(c);
    out << ',' << format_double(rec.f_inc) << ',' << format_double(rec.sig_inc) << ','
        << format_double(rec.delta_p) << ',' << format_double(rec.delta_m) << ','
        << format_double(rec.r) << ',' << format_double(rec.p) << ',' << status_code(rec.status)
        << ',' << rec.cache_size << '\n';
  }
}

void write_log_file(const std::string& path, const std::vector<IterationRecord>& log,
                    std::size_t dimension) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_log(out, log, dimension);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<IterationRecord> read_log(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("empty run log");
  const auto header = split_csv(strip_cr(line));
  constexpr std::size_t kFixed = 2 + std::size(kTail);
  if (header.size() < kFixed + 1) throw InvalidInput("run log header too short");
  const std::size_t n = header.size() - kFixed;
  if (strip_cr(line) != log_header(n)) throw InvalidInput("unexpected run log header: " + line);

  std::vector<IterationRecord> log;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != header.size())
      throw InvalidInput("run log row " + std::to_string(row) + " has " + std::to_string(f.size()) +
                         " fields, expected " + std::to_string(header.size()));
    IterationRecord rec;
    std::size_t i = 0;
    rec.k = std::stoull(f[i++]);
    rec.draws = parse_double(f[i++]);
    std::vector<double> coords(n);
    for (auto& c : coords) c = parse_double(f[i++]);
    rec.incumbent = Point(std::move(coords));
    rec.f_inc = parse_double(f[i++]);
    rec.sig_inc = parse_double(f[i++]);
    rec.delta_p = parse_double(f[i++]);
    rec.delta_m = parse_double(f[i++]);
    rec.r = parse_double(f[i++]);
    rec.p = parse_double(f[i++]);
    if (f[i].size() != 1) throw InvalidInput("bad status field '" + f[i] + "'");
    rec.status = parse_status(f[i++][0]);
    rec.cache_size = std::stoull(f[i++]);
    log.push_back(std::move(rec));
  }
  return log;
}

std::vector<IterationRecord> read_log_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_log(in);
}

void write_cache_dump(std::ostream& out, const EvaluationCache& cache, std::size_t dimension) {
  for (std::size_t i = 1; i <= dimension; ++i) out << "x_" << i << ',';
  out << "n_obs,fk,sigk\n";
  for (const auto& e : cache.entries()) {
    for (double c : e.point.coords()) out << format_double(c) << ',';
    const Estimate est = e.history.estimate();
    out << e.history.size() << ',' << format_double(est.value) << ',' << format_double(est.sigma)
        << '\n';
  }
}

}  // namespace apmads
