#include "peri/field.hpp"

#include <charconv>
#include <map>
#include <mutex>

namespace peri {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void FieldSpec::validate() const {
  if (extension_degree < 1) throw InputError("field extension degree must be >= 1");
  if (characteristic == 0) {
    if (extension_degree != 1) throw InputError("characteristic 0 supports only Q");
    return;
  }
  if (!is_prime(characteristic))
    throw InputError("field characteristic " + std::to_string(characteristic) + " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < extension_degree; ++i) {
    q *= characteristic;
    if (q > (1u << 20)) throw InputError("finite field " + str() + " is too large (limit 2^20)");
  }
}

namespace {

unsigned parse_uint(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InputError("cannot parse field '" + std::string(whole) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

FieldSpec FieldSpec::parse(std::string_view text) {
  auto t = trim(text);
  if (t == "Q" || t == "QQ") return rationals();
  if (t.size() < 5 || t.substr(0, 3) != "GF(" || t.back() != ')')
    throw InputError("cannot parse field '" + std::string(text) + "'");
  auto inner = t.substr(3, t.size() - 4);
  FieldSpec f;
  auto caret = inner.find('^');
  if (caret == std::string_view::npos) {
    f = galois(parse_uint(inner, text), 1);
  } else {
    f = galois(parse_uint(inner.substr(0, caret), text), parse_uint(inner.substr(caret + 1), text));
  }
  f.validate();
  return f;
}

std::string FieldSpec::str() const {
  if (characteristic == 0) return "Q";
  if (extension_degree == 1) return "GF(" + std::to_string(characteristic) + ")";
  return "GF(" + std::to_string(characteristic) + "^" + std::to_string(extension_degree) + ")";
}

// ---------------------------------------------------------------------------

std::shared_ptr<const FiniteField::Tables> FiniteField::make_tables(unsigned p, unsigned k) {
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, k}); it != cache.end()) return it->second;

  FieldSpec{p, k}.validate();
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = 1;
  for (unsigned i = 0; i < k; ++i) t->q *= p;
  const std::uint32_t q = t->q;

  // Lexicographically first monic primitive polynomial: candidates ordered by
  // n = sum c_i p^i over the non-leading coefficients.
  std::vector<unsigned> digits(k);
  for (std::uint32_t n = 1; n < q; ++n) {
    std::uint32_t r = n;
    for (unsigned i = 0; i < k; ++i) {
      digits[i] = r % p;
      r /= p;
    }
    if (digits[0] == 0) continue;
    std::vector<Elem> exp(q - 1);
    std::vector<std::uint32_t> log(q, 0);
    std::vector<unsigned> cur(k, 0);
    cur[0] = 1;
    bool primitive = true;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
      Elem code = 0;
      for (unsigned j = k; j-- > 0;) code = code * p + cur[j];
      if (i > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp[i] = code;
      log[code] = i;
      // cur *= x modulo x^k + sum digits[j] x^j
      unsigned top = cur[k - 1];
      for (unsigned j = k - 1; j > 0; --j) cur[j] = cur[j - 1];
      cur[0] = 0;
      for (unsigned j = 0; j < k; ++j) cur[j] = (cur[j] + (p - (top * digits[j]) % p)) % p;
    }
    if (!primitive) continue;
    {
      Elem code = 0;
      for (unsigned j = k; j-- > 0;) code = code * p + cur[j];
      if (code != 1) continue;
    }
    t->modulus.assign(digits.begin(), digits.end());
    t->modulus.push_back(1);
    t->exp.resize(2 * (q - 1));
    for (std::uint32_t i = 0; i < 2 * (q - 1); ++i) t->exp[i] = exp[i % (q - 1)];
    t->log = std::move(log);
    break;
  }
  if (t->modulus.empty()) throw ConsistencyError("no primitive polynomial found for " + FieldSpec{p, k}.str());
  cache[{p, k}] = t;
  return t;
}

FiniteField::FiniteField(unsigned p, unsigned k) : t_(make_tables(p, k)) {}

FiniteField::Elem FiniteField::digit_add(Elem a, Elem b, bool subtract) const {
  const unsigned p = t_->p;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < t_->k; ++i) {
    unsigned da = a % p, db = b % p;
    a /= p;
    b /= p;
    unsigned d = subtract ? (da + p - db) % p : (da + db) % p;
    out += d * scale;
    scale *= p;
  }
  return out;
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::string FiniteField::str(Elem a) const {
  if (t_->k == 1) return std::to_string(a);
  if (a == 0) return "0";
  // polynomial in x, highest degree first
  std::string out;
  std::vector<unsigned> d(t_->k);
  for (unsigned i = 0; i < t_->k; ++i) {
    d[i] = a % t_->p;
    a /= t_->p;
  }
  for (unsigned i = t_->k; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::vector<FiniteField::Elem> FiniteField::embedding_from(const FiniteField& small) const {
  if (small.characteristic() != characteristic() || degree() % small.degree() != 0)
    throw InputError("cannot embed " + small.spec().str() + " into " + spec().str());
  const unsigned p = characteristic();
  std::vector<Elem> image(small.order());
  if (small.degree() == 1) {
    for (Elem c = 0; c < small.order(); ++c) image[c] = c;
    return image;
  }
  const auto& mod = small.modulus();
  Elem root = 0;
  bool found = false;
  for (Elem r = 1; r < order() && !found; ++r) {
    Elem acc = 0, power = 1;
    for (unsigned c : mod) {
      acc = add(acc, mul(from_int(c), power));
      power = mul(power, r);
    }
    if (acc == 0) {
      root = r;
      found = true;
    }
  }
  if (!found) throw ConsistencyError("modulus of " + small.spec().str() + " has no root in " + spec().str());
  for (Elem e = 0; e < small.order(); ++e) {
    Elem acc = 0, power = 1, rest = e;
    for (unsigned i = 0; i < small.degree(); ++i) {
      acc = add(acc, mul(from_int(rest % p), power));
      rest /= p;
      power = mul(power, root);
    }
    image[e] = acc;
  }
  return image;
}

FiniteField::Elem FiniteField::from_rational(const mpq_class& q) const {
  mpz_class p(t_->p);
  auto reduce = [&](const mpz_class& z) {
    mpz_class r = z % p;
    if (r < 0) r += p;
    return static_cast<Elem>(r.get_ui());
  };
  Elem d = reduce(q.get_den());
  if (d == 0) throw ArithmeticError("denominator of " + q.get_str() + " vanishes in " + spec().str());
  return mul(reduce(q.get_num()), inv(d));
}

}  // namespace peri
