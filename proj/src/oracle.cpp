#include "casimir/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace casimir {
namespace {

// Upper end of the normalised variable t = zeta * decay_length. Integrands are
// polynomials of degree <= 4 in t times exp(-t); 80^4 exp(-80) ~ 1e-27.
constexpr double kTMax = 80.0;

class TraceIntegrand {
 public:
  TraceIntegrand(Term term, const SystemConfig& cfg) : term_(term), cfg_(cfg) {
    const GeometryDerived g = derive_geometry(cfg);
    switch (term) {
      case Term::E12:
        decay_length_ = 2.0 * g.r;
        break;
      case Term::E123:
      case Term::E213:
        decay_length_ = g.r + g.R;
        break;
      case Term::E1323:
        decay_length_ = 2.0 * g.R;
        break;
      case Term::ECP1:
      case Term::ECP2: {
        const AtomSpec& atom = term == Term::ECP1 ? cfg.atom1 : cfg.atom2;
        if (!(atom.position.z > 0.0))
          throw GeometryError(std::string(term_name(term)) + ": atom-wall energy diverges for an atom on the plate");
        decay_length_ = 2.0 * atom.position.z;
        break;
      }
    }
  }

  double decay_length() const { return decay_length_; }

  double operator()(ImaginaryFrequency zeta) const {
    const Vector3& p1 = cfg_.atom1.position;
    const Vector3& p2 = cfg_.atom2.position;
    const Matrix3& a1 = cfg_.atom1.alpha.matrix();
    const Matrix3& a2 = cfg_.atom2.alpha.matrix();

    // (Gamma_3 - Gamma_0)(r, r') is the plate leg; it equals -gamma_bar(r, r').
    auto plate_leg = [&](const Vector3& r, const Vector3& rp) { return -1.0 * gamma_bar(r, rp, zeta); };

    // Half-line density: sign * (1/2) * 2 / (2 pi) * Tr[...], with each
    // delta potential contributing a factor 4 pi.
    constexpr double kPairFactor = kScatteringSign * 16.0 * kPi * kPi / (2.0 * kPi);
    constexpr double kSingleFactor = kScatteringSign * 4.0 * kPi / (2.0 * kPi);

    switch (term_) {
      case Term::E12:
        return kPairFactor * trace_of_product(a1 * gamma0(p1 - p2, zeta), a2 * gamma0(p2 - p1, zeta));
      case Term::E123:
        return kPairFactor * trace_of_product(a1 * gamma0(p1 - p2, zeta), a2 * plate_leg(p2, p1));
      case Term::E213:
        return kPairFactor * trace_of_product(a2 * gamma0(p2 - p1, zeta), a1 * plate_leg(p1, p2));
      case Term::E1323:
        return kPairFactor * trace_of_product(a1 * plate_leg(p1, p2), a2 * plate_leg(p2, p1));
      case Term::ECP1:
        return kSingleFactor * trace_of_product(a1, plate_leg(p1, p1));
      case Term::ECP2:
        return kSingleFactor * trace_of_product(a2, plate_leg(p2, p2));
    }
    return 0.0;
  }

 private:
  Term term_;
  const SystemConfig& cfg_;
  double decay_length_ = 1.0;
};

struct Interval {
  double lo;
  double hi;
  double value;
  double error;
  double l1;
};

bool smaller_error(const Interval& x, const Interval& y) { return x.error < y.error; }

}  // namespace

std::string_view term_name(Term term) {
  switch (term) {
    case Term::E12:
      return "E12";
    case Term::E123:
      return "E123";
    case Term::E213:
      return "E213";
    case Term::E1323:
      return "E1323";
    case Term::ECP1:
      return "ECP1";
    case Term::ECP2:
      return "ECP2";
  }
  return "?";
}

double integrand(Term term, const SystemConfig& cfg, ImaginaryFrequency zeta) {
  return TraceIntegrand(term, cfg)(zeta);
}

OracleResult numeric_energy(Term term, const SystemConfig& cfg, const QuadratureSettings& settings) {
  if (!(settings.rel_tol > 0.0) || settings.max_subdivisions < 1)
    throw std::invalid_argument("quadrature settings need rel_tol > 0 and max_subdivisions >= 1");

  const TraceIntegrand density(term, cfg);
  const double L = density.decay_length();
  long evaluations = 0;
  // Integrate in t = zeta * L so every term decays like exp(-t).
  auto f = [&](double t) {
    ++evaluations;
    return density(ImaginaryFrequency(std::max(t, 0.0) / L)) / L;
  };
  auto rule = [&](double lo, double hi) {
    Interval iv{lo, hi, 0.0, 0.0, 0.0};
    iv.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, lo, hi, 0, 0.0, &iv.error, &iv.l1);
    return iv;
  };

  std::vector<Interval> heap{rule(0.0, kTMax)};
  int subdivisions = 0;
  OracleResult result;
  for (;;) {
    result.value = 0.0;
    result.error_estimate = 0.0;
    result.l1_norm = 0.0;
    for (const Interval& iv : heap) {
      result.value += iv.value;
      result.error_estimate += iv.error;
      result.l1_norm += iv.l1;
    }
    result.evaluations = evaluations;
    const double target = std::max(settings.rel_tol * std::fabs(result.value), settings.abs_floor * result.l1_norm);
    if (result.error_estimate <= target) return result;
    if (subdivisions >= settings.max_subdivisions)
      throw QuadratureError(term, result,
                            std::string(term_name(term)) + ": quadrature did not converge within " +
                                std::to_string(settings.max_subdivisions) + " subdivisions");

    std::pop_heap(heap.begin(), heap.end(), smaller_error);
    const Interval worst = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (worst.lo + worst.hi);
    heap.push_back(rule(worst.lo, mid));
    std::push_heap(heap.begin(), heap.end(), smaller_error);
    heap.push_back(rule(mid, worst.hi));
    std::push_heap(heap.begin(), heap.end(), smaller_error);
    ++subdivisions;
  }
}

double analytic_term(Term term, const EnergyBreakdown& e) {
  switch (term) {
    case Term::E12:
      return e.e12;
    case Term::E123:
      return e.e123;
    case Term::E213:
      return e.e213;
    case Term::E1323:
      return e.e1323;
    case Term::ECP1:
      return e.e_cp1.value_or(std::nan(""));
    case Term::ECP2:
      return e.e_cp2.value_or(std::nan(""));
  }
  return std::nan("");
}

double relative_difference(double analytic, const OracleResult& numeric, double cancellation_floor) {
  const double scale = std::max(std::fabs(analytic), cancellation_floor * numeric.l1_norm);
  const double diff = std::fabs(numeric.value - analytic);
  if (scale == 0.0) return diff == 0.0 ? 0.0 : INFINITY;
  return diff / scale;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const TermCheck& c) { return c.skipped || c.passed; });
}

VerificationReport verify(const SystemConfig& cfg, const VerifySettings& settings, const AnalyticModel& model) {
  const EnergyBreakdown e = model(cfg);
  VerificationReport report;
  report.tolerance = settings.tolerance;
  for (Term term : kAllTerms) {
    TermCheck check;
    check.term = term;
    const bool on_plate = (term == Term::ECP1 && !(cfg.atom1.position.z > 0.0)) ||
                          (term == Term::ECP2 && !(cfg.atom2.position.z > 0.0));
    if (on_plate) {
      check.skipped = true;
      report.checks.push_back(check);
      continue;
    }
    check.analytic = analytic_term(term, e);
    check.numeric = numeric_energy(term, cfg, settings.quadrature);
    check.rel_diff = relative_difference(check.analytic, check.numeric, settings.cancellation_floor);
    check.passed = check.rel_diff <= settings.tolerance;
    report.checks.push_back(check);
  }
  return report;
}

}  // namespace casimir
