#include "hforge/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hforge {

namespace {

constexpr double kPhaseFormTol = 1e-12;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

long phase_exponent(const cplx& z, long q) {
  double turns = std::arg(z) / (2.0 * M_PI) * static_cast<double>(q);
  long k = std::lround(turns);
  return ((k % q) + q) % q;
}

}  // namespace

std::string matrix_to_json(const Matrix& m, long phase_q_max) {
  std::size_t n = m.size();
  long q = smallest_root_order(m, phase_q_max, kPhaseFormTol);
  std::ostringstream out;
  if (q > 0) {
    out << "{\"n\": " << n << ", \"q\": " << q << ", \"log_entries\": [";
    for (std::size_t i = 0; i < n; ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t j = 0; j < n; ++j)
        out << (j ? ", " : "") << phase_exponent(m(i, j), q);
      out << "]";
    }
    out << "]}";
  } else {
    out << "{\"n\": " << n << ", \"entries\": [";
    for (std::size_t i = 0; i < n; ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t j = 0; j < n; ++j)
        out << (j ? ", [" : "[") << fmt17(m(i, j).real()) << ", "
            << fmt17(m(i, j).imag()) << "]";
      out << "]";
    }
    out << "]}";
  }
  return out.str();
}

Matrix matrix_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("matrix JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n"))
    throw std::invalid_argument("matrix JSON: missing \"n\"");
  std::size_t n = j.at("n").get<std::size_t>();
  if (n < 1) throw std::invalid_argument("matrix JSON: n must be >= 1");
  Matrix m(n);
  if (j.contains("log_entries")) {
    if (!j.contains("q")) throw std::invalid_argument("matrix JSON: phase form requires \"q\"");
    long q = j.at("q").get<long>();
    if (q < 1) throw std::invalid_argument("matrix JSON: q must be >= 1");
    const auto& rows = j.at("log_entries");
    if (rows.size() != n) throw std::invalid_argument("matrix JSON: log_entries row count != n");
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw std::invalid_argument("matrix JSON: log_entries column count != n");
      for (std::size_t jj = 0; jj < n; ++jj) {
        long k = rows[i][jj].get<long>();
        if (k < 0 || k >= q)
          throw std::invalid_argument("matrix JSON: log entry out of range [0, q)");
        m(i, jj) = root_of_unity(q, k);
      }
    }
  } else if (j.contains("entries")) {
    const auto& rows = j.at("entries");
    if (rows.size() != n) throw std::invalid_argument("matrix JSON: entries row count != n");
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n)
        throw std::invalid_argument("matrix JSON: entries column count != n");
      for (std::size_t jj = 0; jj < n; ++jj) {
        const auto& e = rows[i][jj];
        if (!e.is_array() || e.size() != 2)
          throw std::invalid_argument("matrix JSON: entry must be [re, im]");
        m(i, jj) = cplx(e[0].get<double>(), e[1].get<double>());
      }
    }
  } else {
    throw std::invalid_argument("matrix JSON: need \"entries\" or \"log_entries\"");
  }
  return m;
}

void save_matrix(const Matrix& m, const std::string& path, long phase_q_max) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << matrix_to_json(m, phase_q_max) << "\n";
}

Matrix load_matrix(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return matrix_from_json(ss.str());
}

Matrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return load_matrix(in);
}

}  // namespace hforge
