#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "apmads/estimation.hpp"
#include "apmads/solver.hpp"

namespace apmads {

/// Header of the run-log CSV for an n-dimensional problem:
///   k,draws,inc_1..inc_n,f_inc,sig_inc,delta_p,delta_m,r,p,status,cache_size
std::string log_header(std::size_t dimension);

/// One row per record; floats printed with 17 significant digits so the log
/// re-parses to the same doubles.
void write_log(std::ostream& out, const std::vector<IterationRecord>& log, std::size_t dimension);
void write_log_file(const std::string& path, const std::vector<IterationRecord>& log,
                    std::size_t dimension);

/// Throws InvalidInput on a malformed header or row.
std::vector<IterationRecord> read_log(std::istream& in);
std::vector<IterationRecord> read_log_file(const std::string& path);

/// Cache dump: x_1..x_n,n_obs,fk,sigk (same float dialect).
void write_cache_dump(std::ostream& out, const EvaluationCache& cache, std::size_t dimension);

std::string format_double(double v);
double parse_double(const std::string& s);

}  // namespace apmads
