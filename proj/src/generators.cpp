#include "rankvc/generators.hpp"

#include <string>

#include "rankvc/errors.hpp"

namespace rankvc {

Graph random_gnp(std::size_t n, const mpq_class& p, Rng& rng) {
  if (p < 0 || p > 1) throw InputError("edge probability must lie in [0, 1]");
  Graph g = Graph::with_vertices(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (bernoulli(rng, p)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return g;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
  const auto bad = [&] { return InputError("not a rational number: '" + std::string(text) + "'"); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  mpq_class out;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad();
    const mpz_class d(std::string(den), 10);
    if (d == 0) throw bad();
    out = mpq_class(mpz_class(std::string(num), 10), d);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw bad();
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    const mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    const mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    out = mpq_class(w * scale + f, scale);
  } else {
    if (!all_digits(body)) throw bad();
    out = mpq_class(mpz_class(std::string(body), 10));
  }
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

}  // namespace rankvc
