#include "zetalab/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

// Continuous argument of the completed function, as the sum of explicitly
// continuous prefactor phases and the principal argument of the L-value.
// Valid pointwise mod 2pi; the caller unwraps along its path.
double completed_arg_mod(Complex s, const Family& family) {
  if (family.is_zeta()) {
    const Complex z = zeta(s);
    return std::arg(s - 1.0) - 0.5 * s.imag() * std::log(kPi) +
           log_gamma(1.0 + 0.5 * s).imag() + std::arg(z);
  }
  const DirichletCharacter& chi = family.chi();
  const double a = (double)chi.parity;
  const Complex L = dirichlet_L(s, chi);
  return -0.5 * s.imag() * std::log(kPi) +
         log_gamma(0.5 * (s + a)).imag() + std::arg(L);
}

double wrap_to_pi(double x) {
  while (x > kPi) x -= 2.0 * kPi;
  while (x < -kPi) x += 2.0 * kPi;
  return x;
}

// Unwrapped argument change along the segment [s0, s1], subdividing until
// each step moves the phase by less than pi/2.
double track_arg(Complex s0, Complex s1, double phi0, double phi1,
                 const Family& family, int depth) {
  const double step = wrap_to_pi(phi1 - phi0);
  if (std::abs(step) < 0.5 * kPi) {
    // Accept, but verify once at the midpoint on shallow recursion levels.
    if (depth > 16) return step;
    const Complex mid = 0.5 * (s0 + s1);
    const double phim = completed_arg_mod(mid, family);
    const double a = wrap_to_pi(phim - phi0);
    const double b = wrap_to_pi(phi1 - phim);
    if (std::abs(a) < 0.5 * kPi && std::abs(b) < 0.5 * kPi &&
        std::abs(a + b - step) < 1e-9)
      return step;
  }
  if (depth >= 20)
    throw evaluation_failure(
        "count_zeros: argument tracking lost continuity after 20 halvings");
  const Complex mid = 0.5 * (s0 + s1);
  const double phim = completed_arg_mod(mid, family);
  return track_arg(s0, mid, phi0, phim, family, depth + 1) +
         track_arg(mid, s1, phim, phi1, family, depth + 1);
}

double arg_change_on_segment(Complex s0, Complex s1, const Family& family) {
  return track_arg(s0, s1, completed_arg_mod(s0, family),
                   completed_arg_mod(s1, family), family, 0);
}

// Brent-style root refinement on a bracketing interval of hardy_z.
double refine_zero(double a, double b, double fa, double fb,
                   const Family& family, double tol) {
  double c = a, fc = fa, d = b - a, e = d;
  while (true) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = m;
      e = m;
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = hardy_z(b, family);
  }
}

std::vector<double> grid_values(double lo, double hi, double h,
                                const Family& family, unsigned threads,
                                std::vector<double>& ts) {
  const std::size_t n = (std::size_t)std::floor((hi - lo) / h) + 1;
  ts.resize(n);
  for (std::size_t i = 0; i < n; ++i) ts[i] = lo + (double)i * h;
  std::vector<double> zs(n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) zs[i] = hardy_z(ts[i], family);
    return zs;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t b = w * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&, b, e] {
      for (std::size_t i = b; i < e; ++i) zs[i] = hardy_z(ts[i], family);
    });
  }
  for (auto& th : pool) th.join();
  return zs;
}

}  // namespace

std::size_t ZeroSet::count_below(double T) const {
  return (std::size_t)(std::upper_bound(ordinates.begin(), ordinates.end(), T) -
                       ordinates.begin());
}

ZeroCount count_zeros(double T, const Family& family) {
  if (T <= 0.0) throw domain_violation("count_zeros: T must be positive");

  // Nudge T off a zero ordinate if hardy_z vanishes there.
  double height = T;
  for (int tries = 0; tries < 8 && std::abs(hardy_z(height, family)) < 1e-8;
       ++tries)
    height += 1e-6;

  // With F real-analytic and F(s) = (root number) q^{1/2-s} F(1-s), the
  // winding over the rectangle [-1,2] x [0,T] collapses to twice the change
  // over [2, 2+iT] + [2+iT, 1/2+iT] plus the modulus term T log q / pi.
  //
  // On Re s = 2 the Dirichlet series keeps the L-value inside the disk
  // |z - 1| < 0.65, so the L-phase never winds there and the edge costs two
  // evaluations; only the top half-edge is tracked.
  const Complex top(2.0, height);
  const Complex half(0.5, height);
  double delta = completed_arg_mod(top, family) -
                 completed_arg_mod(Complex(2.0, 0.0), family);
  // completed_arg_mod is continuous on Re s = 2 (prefactor phases are
  // analytic there, L-phase principal and non-winding), no unwrap needed.
  delta += arg_change_on_segment(top, half, family);

  double n_exact = delta / kPi;
  if (!family.is_zeta())
    n_exact += height * std::log((double)family.chi().modulus) / (2.0 * kPi);

  const double rounded = std::round(n_exact);
  if (std::abs(n_exact - rounded) > 0.25)
    throw evaluation_failure("count_zeros: winding " + std::to_string(n_exact) +
                             " is not close to an integer");
  return ZeroCount{(std::uint64_t)std::llround(rounded),
                   family.counting_main_term(height)};
}

ZeroSet find_zeros(double T, const Family& family, unsigned threads) {
  if (T <= 0.0) throw domain_violation("find_zeros: T must be positive");
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());

  const ZeroCount expected = count_zeros(T, family);
  constexpr double kTol = 1e-10;

  double h = 0.05;
  for (int attempt = 0;; ++attempt, h *= 0.5) {
    if (T / h > 5e7)
      throw completeness_error(
          "find_zeros: refinement grid exceeded 5e7 points without matching "
          "the argument-principle count");
    std::vector<double> ts;
    const std::vector<double> zs = grid_values(1e-4, T, h, family, threads, ts);

    std::vector<std::pair<double, double>> brackets;
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if ((zs[i] > 0.0) != (zs[i + 1] > 0.0))
        brackets.push_back({ts[i], ts[i + 1]});
    }
    // Cover the last partial cell up to T.
    if (!ts.empty() && ts.back() < T) {
      const double zT = hardy_z(T, family);
      if ((zs.back() > 0.0) != (zT > 0.0)) brackets.push_back({ts.back(), T});
    }

    if (brackets.size() == expected.count) {
      std::vector<double> ordinates(brackets.size());
      std::vector<std::thread> pool;
      const std::size_t chunk = (brackets.size() + threads - 1) / threads;
      for (unsigned w = 0; w < threads; ++w) {
        const std::size_t b = w * chunk, e = std::min(brackets.size(), b + chunk);
        if (b >= e) break;
        pool.emplace_back([&, b, e] {
          for (std::size_t i = b; i < e; ++i) {
            const auto [lo, hi] = brackets[i];
            ordinates[i] = refine_zero(lo, hi, hardy_z(lo, family),
                                       hardy_z(hi, family), family, kTol);
          }
        });
      }
      for (auto& th : pool) th.join();
      std::sort(ordinates.begin(), ordinates.end());

      ZeroSet out;
      out.family = family;
      out.ordinates = std::move(ordinates);
      out.certified_height = T;
      out.refinement_tolerance = 1e-9;
      return out;
    }

    if (attempt >= 12) {
      // Look for a sign touch: a tiny local minimum of |Z| with no crossing.
      for (std::size_t i = 1; i + 1 < zs.size(); ++i) {
        if (std::abs(zs[i]) < 1e-8 && (zs[i - 1] > 0.0) == (zs[i + 1] > 0.0))
          throw multiplicity_suspected_error(
              "find_zeros: sign touch without crossing near t = " +
              std::to_string(ts[i]));
      }
      throw completeness_error(
          "find_zeros: scan found " + std::to_string(brackets.size()) +
          " sign changes but the argument principle counts " +
          std::to_string(expected.count));
    }
  }
}

// ---------------------------------------------------------------------------
// Persistence.
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kHeader =
    "family,ordinate,tolerance,certified_height,format=zetalab-zeros-v1";

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, long line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0')
    throw format_error("zero cache: malformed number '" + s + "'", line);
  return v;
}

}  // namespace

void save_zeros(const ZeroSet& zs, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw format_error("save_zeros: cannot open " + path.string());
  out << kHeader << "\n";
  const std::string family = zs.family.label();
  const std::string tol = format_double(zs.refinement_tolerance);
  const std::string height = format_double(zs.certified_height);
  out << family << ",," << tol << "," << height << "\n";
  for (double g : zs.ordinates)
    out << family << "," << format_double(g) << "," << tol << "," << height
        << "\n";
}

ZeroSet load_zeros(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw format_error("load_zeros: cannot open " + path.string());
  std::string line;
  long lineno = 0;

  if (!std::getline(in, line)) throw format_error("load_zeros: empty file", 1);
  ++lineno;
  if (line != kHeader)
    throw format_error("load_zeros: format-version mismatch in header", 1);

  ZeroSet zs;
  bool have_meta = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fields = split_csv(line);
    if (fields.size() != 4)
      throw format_error("zero cache: expected 4 columns", lineno);
    if (!have_meta) {
      zs.family = Family::parse(fields[0]);
      if (!fields[1].empty())
        throw format_error("zero cache: first row must be the metadata row",
                           lineno);
      zs.refinement_tolerance = parse_double(fields[2], lineno);
      zs.certified_height = parse_double(fields[3], lineno);
      have_meta = true;
      continue;
    }
    if (fields[0] != zs.family.label())
      throw format_error("zero cache: family changed mid-file", lineno);
    const double g = parse_double(fields[1], lineno);
    if (!zs.ordinates.empty() && g <= zs.ordinates.back())
      throw format_error("zero cache: ordinates not strictly increasing", lineno);
    zs.ordinates.push_back(g);
  }
  if (!have_meta) throw format_error("load_zeros: missing metadata row", 2);
  return zs;
}

}  // namespace zetalab
