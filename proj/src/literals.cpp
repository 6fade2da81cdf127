#include "llab/literals.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace llab {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

[[noreturn]] void bad(const std::string& what, const std::string& text) {
  throw std::invalid_argument(what + ": '" + text + "'");
}

// Splits "name(arg1,arg2,...)" honoring nested parentheses.
bool split_call(const std::string& text, std::string& name,
                std::vector<std::string>& args) {
  const std::size_t open = text.find('(');
  if (open == std::string::npos || text.back() != ')') return false;
  name = trim(text.substr(0, open));
  const std::string inner = text.substr(open + 1, text.size() - open - 2);
  args.clear();
  int depth = 0;
  std::string cur;
  for (char ch : inner) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      args.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || args.empty()) args.push_back(trim(cur));
  return true;
}

double parse_plain_real(const std::string& text) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &pos);
  } catch (const std::exception&) {
    bad("cannot parse real", text);
  }
  if (pos != text.size()) bad("trailing characters in real", text);
  return v;
}

}  // namespace

double parse_real(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) bad("empty real literal", raw);
  const std::size_t at = text.find("pi");
  if (at != std::string::npos) {
    if (at + 2 != text.size()) bad("trailing characters after pi", raw);
    const std::string head = trim(text.substr(0, at));
    if (head.empty()) return kPi;
    if (head == "-") return -kPi;
    if (head == "+") return kPi;
    return parse_plain_real(head) * kPi;
  }
  return parse_plain_real(text);
}

cplx parse_complex(const std::string& raw) {
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  }
  if (text.empty()) bad("empty complex literal", raw);
  if (text.back() != 'i') return {parse_real(text), 0.0};

  // pure imaginary or a+bi; find the sign separating real and imaginary
  std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') &&
        body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) {
    if (body.empty() || body == "+") return {0.0, 1.0};
    if (body == "-") return {0.0, -1.0};
    return {0.0, parse_real(body)};
  }
  const std::string re = body.substr(0, split);
  std::string im = body.substr(split);
  if (im == "+") im = "1";
  if (im == "-") im = "-1";
  return {parse_real(re), parse_real(im)};
}

Symbol parse_symbol(const std::string& raw) {
  const std::string text = trim(raw);
  const std::size_t colon = text.find(':');
  if (colon != std::string::npos && trim(text.substr(0, colon)) == "trigpoly") {
    std::vector<cplx> coeffs;
    std::string rest = text.substr(colon + 1);
    std::string tok;
    for (char ch : rest + " ") {
      if (std::isspace(static_cast<unsigned char>(ch))) {
        if (!tok.empty()) {
          coeffs.push_back(parse_complex(tok));
          tok.clear();
        }
      } else {
        tok += ch;
      }
    }
    if (coeffs.empty()) bad("trigpoly needs coefficients", raw);
    if (coeffs.size() % 2 == 0) {
      bad("trigpoly needs an odd coefficient count c_{-n}..c_n", raw);
    }
    return Symbol::trig_poly(std::move(coeffs));
  }

  std::string name;
  std::vector<std::string> args;
  if (!split_call(text, name, args)) bad("cannot parse symbol", raw);
  if (name == "hat" && args.size() == 2) {
    return Symbol::hat(parse_real(args[0]), parse_real(args[1]));
  }
  if (name == "step" && args.size() == 3) {
    return Symbol::indicator(parse_real(args[0]), parse_real(args[1]),
                             parse_complex(args[2]));
  }
  if (name == "const" && args.size() == 1) {
    return Symbol::constant(parse_complex(args[0]));
  }
  if (name == "exp" && (args.size() == 1 || args.size() == 2)) {
    const long long n = static_cast<long long>(parse_real(args[0]));
    const cplx c = args.size() == 2 ? parse_complex(args[1]) : cplx{1.0, 0.0};
    return Symbol::exponential(n, c);
  }
  bad("unknown symbol literal", raw);
}

Weight parse_weight(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "none" || text.empty()) return Weight::identity();
  std::string name;
  std::vector<std::string> args;
  if (!split_call(text, name, args)) bad("cannot parse weight", raw);
  if (name == "const" && args.size() == 1) {
    return Weight::constant(parse_real(args[0]));
  }
  if (name == "power" && args.size() == 1) {
    return Weight::power(parse_real(args[0]), WeightDomain::FullLine);
  }
  if (name == "halfpower" && args.size() == 1) {
    return Weight::power(parse_real(args[0]), WeightDomain::HalfLine);
  }
  if (name == "pow" && args.size() == 2) {
    return Weight::exponentiated(parse_weight(args[0]), parse_real(args[1]));
  }
  bad("unknown weight literal", raw);
}

SpaceSpec parse_space(const std::string& raw) {
  std::string text = trim(raw);
  // optional weight composition: <space>*<weight>
  int depth = 0;
  std::size_t star = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (text[i] == '*' && depth == 0) {
      star = i;
      break;
    }
  }
  if (star != std::string::npos) {
    const SpaceSpec base = parse_space(text.substr(0, star));
    return base.with_weight(parse_weight(text.substr(star + 1)));
  }

  if (text == "l2") return SpaceSpec::lebesgue(2.0);
  std::string name;
  std::vector<std::string> args;
  if (!split_call(text, name, args)) bad("cannot parse space", raw);
  if (name == "lp" && args.size() == 1) {
    return SpaceSpec::lebesgue(parse_real(args[0]));
  }
  if (name == "lorentz" && args.size() == 2) {
    return SpaceSpec::lorentz(parse_real(args[0]), parse_real(args[1]));
  }
  if (name == "orlicz-power" && args.size() == 1) {
    return SpaceSpec::orlicz(YoungFunction::power(parse_real(args[0])));
  }
  if (name == "orlicz-piecewise" && args.size() == 2) {
    return SpaceSpec::orlicz(YoungFunction::piecewise_power(
        parse_real(args[0]), parse_real(args[1])));
  }
  if (name == "orlicz-logpow" && args.size() == 2) {
    return SpaceSpec::orlicz(YoungFunction::log_perturbed_power(
        parse_real(args[0]), parse_real(args[1])));
  }
  bad("unknown space literal", raw);
}

}  // namespace llab
