#include "trd/family_spec.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include "trd/error.hpp"
#include "trd/vertex_set.hpp"

namespace trd {

namespace {

using namespace family;

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidSpec, what); }

void require(bool ok, const std::string& what) {
  if (!ok) invalid(what);
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

// Generated graphs must fit the adjacency word; the count is checked
// before anything is built.
long long order_of(const FamilySpec& spec);

long long order_of(const FamilySpec& spec) {
  return std::visit(
      [](const auto& k) -> long long {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Path> || std::is_same_v<T, Cycle> || std::is_same_v<T, Complete>) {
          return k.n;
        } else if constexpr (std::is_same_v<T, Star>) {
          return k.k + 1LL;
        } else if constexpr (std::is_same_v<T, SubdividedStar>) {
          return 2LL * k.k + 1;
        } else if constexpr (std::is_same_v<T, DoubleStar>) {
          return 2LL + k.a + k.b;
        } else if constexpr (std::is_same_v<T, Corona>) {
          return 2 * order_of(*k.inner);
        } else if constexpr (std::is_same_v<T, Spider>) {
          long long n = 1;
          for (int l : k.legs) n += l;
          return n;
        } else if constexpr (std::is_same_v<T, FamilyG>) {
          return 4LL + 2LL * (k.k1 + k.k2);
        } else if constexpr (std::is_same_v<T, FamilyH>) {
          return 2LL * (k.a + k.b) + k.r + 2;
        } else if constexpr (std::is_same_v<T, Galaxy>) {
          long long n = 0;
          for (int s : k.sizes) n += s + 1LL;
          return n;
        } else if constexpr (std::is_same_v<T, CartesianComplete>) {
          return static_cast<long long>(k.n) * k.m;
        } else if constexpr (std::is_same_v<T, ProductDeleted>) {
          return (k.l + 1LL) * (k.l + 1LL) - (k.l + 1) / 2;
        } else if constexpr (std::is_same_v<T, DeadExample>) {
          return 3LL * k.n + 1;
        } else {
          long long n = 0;
          for (const auto& p : k.parts) n += order_of(p);
          return n;
        }
      },
      spec.kind);
}

void validate_kind(const FamilySpec& spec) {
  std::visit(
      [](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Path> || std::is_same_v<T, Complete>) {
          require(k.n >= 1, "order must be >= 1");
        } else if constexpr (std::is_same_v<T, Cycle>) {
          require(k.n >= 3, "cycle order must be >= 3");
        } else if constexpr (std::is_same_v<T, Star>) {
          require(k.k >= 1, "star needs k >= 1 leaves");
        } else if constexpr (std::is_same_v<T, SubdividedStar>) {
          require(k.k >= 2, "subdivided star needs k >= 2");
        } else if constexpr (std::is_same_v<T, DoubleStar>) {
          require(k.a >= 1 && k.b >= 1, "double star needs a, b >= 1");
        } else if constexpr (std::is_same_v<T, Corona>) {
          require(k.inner != nullptr, "corona needs an inner graph");
          validate(*k.inner);
        } else if constexpr (std::is_same_v<T, Spider>) {
          require(k.legs.size() >= 2, "spider needs k >= 2 legs");
          for (int l : k.legs) require(l >= 1, "spider legs must have length >= 1");
        } else if constexpr (std::is_same_v<T, FamilyG>) {
          require(k.k1 >= 0 && k.k2 >= 0, "familyG needs k1, k2 >= 0");
          require(k.k1 + k.k2 >= 1, "familyG needs k1 + k2 >= 1");
        } else if constexpr (std::is_same_v<T, FamilyH>) {
          require(k.a >= 1 && k.b >= 1, "familyH needs a, b >= 1");
          require(k.r >= 0, "familyH needs r >= 0");
        } else if constexpr (std::is_same_v<T, Galaxy>) {
          require(k.sizes.size() >= 2, "galaxy needs t >= 2 stars");
          for (int s : k.sizes) require(s >= 1, "galaxy stars need s >= 1");
        } else if constexpr (std::is_same_v<T, CartesianComplete>) {
          require(k.n >= 2 && k.m >= 2, "KxK needs n, m >= 2");
        } else if constexpr (std::is_same_v<T, ProductDeleted>) {
          require(k.l >= 2, "Gd needs l >= 2");
        } else if constexpr (std::is_same_v<T, DeadExample>) {
          require(k.n >= 2, "D needs n >= 2");
        } else {
          require(!k.parts.empty(), "union needs at least one part");
          for (const auto& p : k.parts) validate(p);
        }
      },
      spec.kind);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec spec = parse_spec();
    skip_space();
    require(pos_ == text_.size(), "trailing characters in \"" + std::string(text_) + "\"");
    return spec;
  }

 private:
  struct Arg {
    std::optional<int> number;
    std::string name;  // for name=value
    std::optional<FamilySpec> spec;
  };

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    require(pos_ > start && std::isalpha(static_cast<unsigned char>(text_[start])),
            "expected a family name at offset " + std::to_string(start));
    return std::string(text_.substr(start, pos_ - start));
  }

  int number() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    require(ec == std::errc{} && ptr != first, "expected an integer at offset " + std::to_string(pos_));
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  Arg argument() {
    skip_space();
    Arg a;
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      a.number = number();
      return a;
    }
    const std::size_t mark = pos_;
    std::string id = identifier();
    if (eat('=')) {
      a.name = id;
      a.number = number();
      return a;
    }
    pos_ = mark;
    a.spec = parse_spec();
    return a;
  }

  std::vector<Arg> arguments() {
    std::vector<Arg> args;
    if (!eat('(')) return args;
    if (eat(')')) return args;
    do {
      args.push_back(argument());
    } while (eat(','));
    require(eat(')'), "expected ')' at offset " + std::to_string(pos_));
    return args;
  }

  static std::vector<int> positional(const std::vector<Arg>& args, const std::string& name) {
    std::vector<int> out;
    for (const auto& a : args) {
      require(a.number.has_value() && a.name.empty(), name + "(...) takes integer arguments");
      out.push_back(*a.number);
    }
    return out;
  }

  static std::vector<int> exactly(const std::vector<Arg>& args, const std::string& name, std::size_t count) {
    auto xs = positional(args, name);
    require(xs.size() == count, name + " takes " + std::to_string(count) + " argument(s)");
    return xs;
  }

  // "K5", "P4", "C6": single-letter shorthand followed by digits.
  static std::optional<FamilySpec> shorthand(const std::string& id) {
    if (id.size() < 2 || !std::all_of(id.begin() + 1, id.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return std::nullopt;
    const int n = std::stoi(id.substr(1));
    switch (id[0]) {
      case 'K': return FamilySpec{Complete{n}};
      case 'P': return FamilySpec{Path{n}};
      case 'C': return FamilySpec{Cycle{n}};
      default: return std::nullopt;
    }
  }

  FamilySpec parse_spec() {
    const std::string id = identifier();
    if (auto s = shorthand(id)) {
      skip_space();
      require(pos_ >= text_.size() || text_[pos_] != '(', id + " takes no arguments");
      return *s;
    }
    const auto args = arguments();
    if (id == "path" || id == "P") return Path{exactly(args, id, 1)[0]};
    if (id == "cycle" || id == "C") return Cycle{exactly(args, id, 1)[0]};
    if (id == "complete" || id == "K") return Complete{exactly(args, id, 1)[0]};
    if (id == "star") return Star{exactly(args, id, 1)[0]};
    if (id == "substar" || id == "subdivided_star") return SubdividedStar{exactly(args, id, 1)[0]};
    if (id == "doublestar" || id == "double_star") {
      auto xs = exactly(args, id, 2);
      return DoubleStar{xs[0], xs[1]};
    }
    if (id == "spider" || id == "Sp") {
      auto legs = positional(args, id);
      std::sort(legs.begin(), legs.end());
      return Spider{legs};
    }
    if (id == "familyG" || id == "G") {
      auto xs = exactly(args, id, 2);
      return FamilyG{xs[0], xs[1]};
    }
    if (id == "familyH" || id == "H") {
      require(args.size() == 3, id + " takes (a, b, r=R)");
      FamilyH h;
      require(args[0].number && args[0].name.empty() && args[1].number && args[1].name.empty(),
              id + " takes integer a and b");
      h.a = *args[0].number;
      h.b = *args[1].number;
      require(args[2].number && (args[2].name.empty() || args[2].name == "r"), id + " takes r=R as third argument");
      h.r = *args[2].number;
      return h;
    }
    if (id == "galaxy") {
      auto sizes = positional(args, id);
      std::sort(sizes.begin(), sizes.end());
      return Galaxy{sizes};
    }
    if (id == "KxK") {
      auto xs = exactly(args, id, 2);
      return CartesianComplete{xs[0], xs[1]};
    }
    if (id == "Gd") return ProductDeleted{exactly(args, id, 1)[0]};
    if (id == "D") return DeadExample{exactly(args, id, 1)[0]};
    if (id == "cor") {
      require(args.size() == 1 && args[0].spec, "cor takes one nested family");
      return corona_of(*args[0].spec);
    }
    if (id == "union") {
      std::vector<FamilySpec> parts;
      for (const auto& a : args) {
        require(a.spec.has_value(), "union takes nested families");
        parts.push_back(*a.spec);
      }
      return union_of(std::move(parts));
    }
    invalid("unknown family \"" + id + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

void validate(const FamilySpec& spec) {
  validate_kind(spec);
  const long long n = order_of(spec);
  require(n <= kMaxOrder, to_string(spec) + " has order " + std::to_string(n) + " > " + std::to_string(kMaxOrder));
}

FamilySpec parse_family(std::string_view text) {
  FamilySpec spec = Parser(text).parse_all();
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      [](const auto& k) -> std::string {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Path>) return "path(" + std::to_string(k.n) + ")";
        else if constexpr (std::is_same_v<T, Cycle>) return "cycle(" + std::to_string(k.n) + ")";
        else if constexpr (std::is_same_v<T, Complete>) return "K" + std::to_string(k.n);
        else if constexpr (std::is_same_v<T, Star>) return "star(" + std::to_string(k.k) + ")";
        else if constexpr (std::is_same_v<T, SubdividedStar>) return "substar(" + std::to_string(k.k) + ")";
        else if constexpr (std::is_same_v<T, DoubleStar>)
          return "doublestar(" + std::to_string(k.a) + "," + std::to_string(k.b) + ")";
        else if constexpr (std::is_same_v<T, Corona>) return "cor(" + (k.inner ? to_string(*k.inner) : "") + ")";
        else if constexpr (std::is_same_v<T, Spider>) return "spider(" + join(k.legs) + ")";
        else if constexpr (std::is_same_v<T, FamilyG>)
          return "familyG(" + std::to_string(k.k1) + "," + std::to_string(k.k2) + ")";
        else if constexpr (std::is_same_v<T, FamilyH>)
          return "familyH(" + std::to_string(k.a) + "," + std::to_string(k.b) + ",r=" + std::to_string(k.r) + ")";
        else if constexpr (std::is_same_v<T, Galaxy>) return "galaxy(" + join(k.sizes) + ")";
        else if constexpr (std::is_same_v<T, CartesianComplete>)
          return "KxK(" + std::to_string(k.n) + "," + std::to_string(k.m) + ")";
        else if constexpr (std::is_same_v<T, ProductDeleted>) return "Gd(" + std::to_string(k.l) + ")";
        else if constexpr (std::is_same_v<T, DeadExample>) return "D(" + std::to_string(k.n) + ")";
        else {
          std::string out = "union(";
          for (std::size_t i = 0; i < k.parts.size(); ++i) {
            if (i) out += ',';
            out += to_string(k.parts[i]);
          }
          return out + ")";
        }
      },
      spec.kind);
}

bool operator==(const FamilySpec& a, const FamilySpec& b) { return to_string(a) == to_string(b); }

FamilySpec corona_of(FamilySpec inner) {
  return family::Corona{std::make_shared<const FamilySpec>(std::move(inner))};
}

FamilySpec union_of(std::vector<FamilySpec> parts) { return family::DisjointUnion{std::move(parts)}; }

}  // namespace trd
