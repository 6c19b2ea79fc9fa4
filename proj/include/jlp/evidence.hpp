#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace jlp {

// Which ratio an EvidenceRatio expresses.
enum class Orientation {
  NullOverAlt,          // K = BF01, the null-over-alternative convention
  AltOverNull,          // BF10
  PositiveOverNegative  // BF+- , direction of an effect
};

inline const char* to_string(Orientation o) {
  switch (o) {
    case Orientation::NullOverAlt: return "BF01";
    case Orientation::AltOverNull: return "BF10";
    case Orientation::PositiveOverNegative: return "BF+-";
  }
  return "?";
}

// A Bayes factor held on the natural-log scale. The linear value is only
// materialised on request, so factorial-heavy or large-n ratios never
// overflow internally.
class EvidenceRatio {
 public:
  static EvidenceRatio from_log(double log_value, Orientation o,
                                std::string warning = {}) {
    if (std::isnan(log_value))
      throw std::domain_error("EvidenceRatio: log value is NaN");
    return EvidenceRatio(log_value, o, std::move(warning));
  }

  static EvidenceRatio from_value(double value, Orientation o,
                                  std::string warning = {}) {
    if (!(value > 0.0) || !std::isfinite(value))
      throw std::domain_error("EvidenceRatio: value must be positive finite");
    return EvidenceRatio(std::log(value), o, std::move(warning));
  }

  double log_value() const { return log_value_; }
  double value() const { return std::exp(log_value_); }
  Orientation orientation() const { return orientation_; }

  // Same evidence quoted for the other model.
  EvidenceRatio inverted() const {
    Orientation o = orientation_;
    if (o == Orientation::NullOverAlt) o = Orientation::AltOverNull;
    else if (o == Orientation::AltOverNull) o = Orientation::NullOverAlt;
    return EvidenceRatio(-log_value_, o, warning_);
  }

  bool has_warning() const { return !warning_.empty(); }
  const std::string& warning() const { return warning_; }

 private:
  EvidenceRatio(double lv, Orientation o, std::string w)
      : log_value_(lv), orientation_(o), warning_(std::move(w)) {}

  double log_value_;
  Orientation orientation_;
  std::string warning_;
};

}  // namespace jlp
