#include "msl/class_label.hpp"

#include <cctype>
#include <regex>
#include <stdexcept>

#include "msl/charnum.hpp"

namespace msl {

namespace {

MUClass atom(const MUBasis& basis, const std::string& s) {
  static const std::regex cp(R"(CP(\d+))"), mh(R"(H(\d+)_(\d+))"), hs(R"(X(\d+)_(\d+))"), gen(R"(x(\d+))"),
      num(R"(-?\d+)");
  std::smatch m;
  auto arg = [&](int i) { return std::stoi(m[static_cast<std::size_t>(i)].str()); };
  const FGLContext& ctx = basis.context();
  if (std::regex_match(s, m, cp)) return cpn_class(ctx, arg(1));
  if (std::regex_match(s, m, mh)) return milnor_hypersurface_class(ctx, arg(1), arg(2));
  if (std::regex_match(s, m, hs)) return hypersurface_class(arg(1), arg(2)).cls;
  if (std::regex_match(s, m, gen)) {
    int n = arg(1);
    if (n < 1 || n > basis.max_degree()) throw std::out_of_range("generator x" + std::to_string(n) + " out of range");
    return basis.generator(n);
  }
  if (std::regex_match(s, m, num)) return MUClass::unit().scale(Integer(s));
  throw std::invalid_argument("cannot parse class factor '" + s + "'");
}

}  // namespace

MUClass parse_class_label(const MUBasis& basis, const std::string& label) {
  std::string s;
  for (char c : label)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty class label");
  MUClass result = MUClass::unit();
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t stop = s.find('*', start);
    std::string factor = s.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    if (factor.empty()) throw std::invalid_argument("malformed class label '" + label + "'");
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      const std::string e = factor.substr(caret + 1);
      if (e.empty() || !std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw std::invalid_argument("bad exponent in '" + factor + "'");
      power = std::stoi(e);
      factor = factor.substr(0, caret);
    }
    MUClass f = atom(basis, factor);
    for (int i = 0; i < power; ++i) {
      if (result.degree + f.degree > basis.max_degree())
        throw std::out_of_range("class '" + label + "' exceeds the truncation " + std::to_string(basis.max_degree()));
      result = product(result, f);
    }
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  return result;
}

}  // namespace msl
