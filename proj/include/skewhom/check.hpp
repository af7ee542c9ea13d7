#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace skewhom {

/// The first failing input of a check and what went wrong there.
struct Witness {
  std::string what;                  // which identity failed, e.g. "hom-jacobi"
  std::vector<std::size_t> indices;  // basis indices of the failing input tuple
  std::string residual;              // nonzero residual, printed in the backend

  std::string to_string() const {
    std::string out = what + " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(indices[i]);
    }
    return out + "): residual " + residual;
  }

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  bool passed = true;
  std::optional<Witness> witness;
  std::string note;

  static CheckReport pass(std::string note = {}) { return CheckReport{true, std::nullopt, std::move(note)}; }
  static CheckReport fail(Witness w) { return CheckReport{false, std::move(w), {}}; }

  explicit operator bool() const { return passed; }
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

}  // namespace skewhom
