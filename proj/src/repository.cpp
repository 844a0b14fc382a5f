#include "mlpr/repository.hpp"

#include "problems_data.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mlpr {

namespace {

Matrix parse_number_grid(const char* text, Index rows, Index cols) {
  Matrix out(rows, cols);
  std::istringstream in(text);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      if (!(in >> out(i, j))) {
        throw std::logic_error("bundled problem data is malformed");
      }
    }
  }
  return out;
}

struct Registry {
  std::vector<std::string> names;
  std::map<std::string, ProblemRecord, std::less<>> records;
};

// R1 as given in the solver walkthrough; equals normalize(R3_1).
Matrix r1_flattening() {
  const double t = 1.0 / 3.0, h = 0.5;
  Matrix r(3, 9);
  r << t, t, t, t, 0, 0, 0, 0, 0,
       t, t, t, t, 0, h, 1, 0, 1,
       t, t, t, t, 1, h, 0, 1, 0;
  return r;
}

// R2 as given in the solver walkthrough; equals normalize(R4_11).
Matrix r2_flattening() {
  const double h = 0.5;
  Matrix r(4, 16);
  r << 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, h,
       0, 0, 0, 0, 0, 1, 0, 1, 0, h, 0, 0, 0, h, 0, 0,
       0, 0, 0, 0, 0, 0, 1, 0, 0, h, 1, 1, 0, 0, 0, 0,
       1, 1, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 1, h, 1, h;
  return r;
}

const Registry& registry() {
  static const Registry instance = [] {
    Registry reg;
    auto put = [&reg](std::string name, TransitionTensor tensor,
                      std::string provenance) {
      reg.names.push_back(name);
      reg.records.emplace(
          name, ProblemRecord{name, std::move(tensor), std::move(provenance)});
    };
    put("R1", TransitionTensor(3, r1_flattening()),
        "3x3x3 walkthrough tensor; equals R3_1 after normalization");
    put("R2", TransitionTensor(3, r2_flattening()),
        "4x4x4 walkthrough tensor; equals R4_11 after normalization");
    for (const auto& raw : detail::appendix_problems()) {
      const Index n = raw.dim;
      const Matrix binary = parse_number_grid(raw.rows, n, n * n);
      put(raw.name, TransitionTensor(3, normalize_binary(binary)),
          raw.provenance);
    }
    return reg;
  }();
  return instance;
}

}  // namespace

Matrix normalize_binary(const Matrix& raw) {
  if ((raw.array() < 0.0).any()) {
    throw std::invalid_argument("normalize_binary: negative entries");
  }
  Matrix normalized = raw;
  for (Index c = 0; c < raw.cols(); ++c) {
    const double sum = raw.col(c).sum();
    if (sum <= 0.0) {
      std::ostringstream msg;
      msg << "normalize_binary: column " << c << " has no positive entry";
      throw std::invalid_argument(msg.str());
    }
    normalized.col(c) /= sum;
  }
  return normalized;
}

const ProblemRecord& load_problem(std::string_view name) {
  const auto& reg = registry();
  const auto it = reg.records.find(name);
  if (it == reg.records.end()) {
    throw std::out_of_range("load_problem: unknown problem '" +
                            std::string(name) + "'");
  }
  return it->second;
}

const std::vector<std::string>& problem_names() { return registry().names; }

bool has_problem(std::string_view name) {
  return registry().records.count(name) > 0;
}

TransitionTensor example31_tensor() {
  const double h = 0.5;
  Matrix r(3, 9);
  // Slices P(:,:,1), P(:,:,2), P(:,:,3) side by side.
  r << 0, h, 0,   h, 0, 1,   h, h, 0,
       0, 0, 0,   0, h, 0,   0, h, 0,
       1, h, 1,   h, h, 0,   h, 0, 1;
  return TransitionTensor(3, std::move(r));
}

TransitionTensor nonunique_example_tensor() {
  const double t = 1.0 / 3.0;
  Matrix r(3, 9);
  r << 0, 0, 0, 0, 0, 0, t, 1, 0,
       0, 0, 0, 0, 1, 0, t, 0, 1,
       1, 1, 1, 1, 0, 1, t, 0, 0;
  return TransitionTensor(3, std::move(r));
}

ProbabilityVector nonunique_example_teleport() {
  Vector v(3);
  v << 0, 1, 0;
  return ProbabilityVector(std::move(v));
}

TransitionTensor named_tensor(std::string_view name) {
  if (name == "example31") return example31_tensor();
  if (name == "nonunique") return nonunique_example_tensor();
  return load_problem(name).tensor;
}

TransitionTensor parse_tensor(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;

  auto next_line = [&](const char* what) {
    if (!std::getline(in, line)) {
      std::ostringstream msg;
      msg << "parse_tensor: unexpected end of input before " << what
          << " (line " << line_no + 1 << ")";
      throw std::invalid_argument(msg.str());
    }
    ++line_no;
  };

  next_line("the format header");
  if (line != "mlpr-tensor v1") {
    throw std::invalid_argument(
        "parse_tensor: line 1 must be 'mlpr-tensor v1', got '" + line + "'");
  }

  auto parse_header_int = [&](const char* key) {
    next_line(key);
    std::istringstream fields(line);
    std::string label;
    long long value = 0;
    if (!(fields >> label >> value) || label != key) {
      std::ostringstream msg;
      msg << "parse_tensor: line " << line_no << " must read '" << key
          << " <integer>', got '" << line << "'";
      throw std::invalid_argument(msg.str());
    }
    std::string extra;
    if (fields >> extra) {
      std::ostringstream msg;
      msg << "parse_tensor: trailing tokens on line " << line_no;
      throw std::invalid_argument(msg.str());
    }
    return value;
  };

  const long long order = parse_header_int("order");
  const long long dim = parse_header_int("dim");
  if (order < 2 || order > 16 || dim < 1) {
    throw std::invalid_argument("parse_tensor: unreasonable order or dim");
  }
  Index cols = 1;
  for (long long t = 1; t < order; ++t) cols *= dim;

  Matrix flat(dim, cols);
  for (Index i = 0; i < dim; ++i) {
    next_line("a flattening row");
    const char* cursor = line.c_str();
    for (Index j = 0; j < cols; ++j) {
      char* end = nullptr;
      const double value = std::strtod(cursor, &end);
      if (end == cursor) {
        std::ostringstream msg;
        msg << "parse_tensor: line " << line_no << ", value " << j + 1
            << ": expected a number, got '" << cursor << "'";
        throw std::invalid_argument(msg.str());
      }
      flat(i, j) = value;
      cursor = end;
    }
    char* end = nullptr;
    std::strtod(cursor, &end);
    if (end != cursor) {
      std::ostringstream msg;
      msg << "parse_tensor: line " << line_no << " has more than " << cols
          << " values";
      throw std::invalid_argument(msg.str());
    }
  }
  return TransitionTensor(static_cast<int>(order), std::move(flat));
}

std::string serialize_tensor(const TransitionTensor& tensor) {
  std::ostringstream out;
  out << "mlpr-tensor v1\n";
  out << "order " << tensor.order() << "\n";
  out << "dim " << tensor.dim() << "\n";
  char buffer[40];
  for (Index i = 0; i < tensor.dim(); ++i) {
    for (Index j = 0; j < tensor.flattening().cols(); ++j) {
      std::snprintf(buffer, sizeof buffer, "%.17g", tensor.flattening()(i, j));
      if (j) out << ' ';
      out << buffer;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace mlpr
