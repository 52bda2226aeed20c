#include "decider_expr.hpp"

#include <cctype>
#include <vector>

#include "equlat/checks/zoo.hpp"
#include "equlat/clocked.hpp"
#include "equlat/error.hpp"
#include "equlat/partition_io.hpp"
#include "equlat/predicates.hpp"
#include "equlat/text_io.hpp"

namespace equlat::cli {
namespace {

struct Node {
  std::string head;
  std::vector<Node> args;
  bool called = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
    }
  }

  Node parse() {
    Node n = node();
    if (pos_ != text_.size()) fail("unexpected `" + std::string(1, text_[pos_]) + "`");
    return n;
  }

 private:
  Node node() {
    Node n;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != ',') {
      n.head.push_back(text_[pos_++]);
    }
    if (n.head.empty()) fail("expected a name");
    if (pos_ < text_.size() && text_[pos_] == '(') {
      n.called = true;
      ++pos_;
      n.args.push_back(node());
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        n.args.push_back(node());
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected `)`");
      ++pos_;
    }
    return n;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kParse, "decider expression, position " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string text_;
  std::size_t pos_ = 0;
};

void want_args(const Node& n, std::size_t count) {
  if (n.args.size() != count || (count > 0) != n.called) {
    throw Error(ErrorKind::kParse, "`" + n.head + "` takes " + std::to_string(count) + " argument(s)");
  }
}

const std::string& leaf(const Node& n) {
  if (n.called) throw Error(ErrorKind::kParse, "`" + n.head + "` is not a plain argument");
  return n.head;
}

DeciderEq build(const Node& n) {
  const std::string& h = n.head;
  if (h == "bottom" || h == "top" || h == "parity") {
    want_args(n, 0);
    return h == "bottom" ? bottom_decider() : h == "top" ? top_decider() : parity_decider();
  }
  if (h == "singular") {
    want_args(n, 1);
    const std::string name = leaf(n.args[0]);
    const Predicate p = named_predicate(name);
    return singular_from_predicate(name, [p](const Natural& x) {
      if (!fits_u64(x)) throw Error(ErrorKind::kOverflow, "argument too large");
      return p(static_cast<std::uint64_t>(x));
    });
  }
  if (h == "meet") {
    want_args(n, 2);
    return meet_combinator(build(n.args[0]), build(n.args[1]));
  }
  if (h == "complement") {
    want_args(n, 1);
    return least_element_complement(build(n.args[0]));
  }
  if (h == "partition") {
    want_args(n, 1);
    const std::string& path = leaf(n.args[0]);
    return partition_decider(parse_partition(read_text_file(path)), path);
  }
  if (h == "nonhalt") {
    want_args(n, 1);
    const Natural steps = parse_natural_text(leaf(n.args[0]));
    if (steps > 1000000000) throw Error(ErrorKind::kInvalidArgument, "nonhalt step count too large");
    return nonhalt_eq(static_cast<std::size_t>(steps));
  }
  if (h == "approx-even" || h == "approx-odd") {
    want_args(n, 1);
    const ClockedMachine cm(checks::load_machine(leaf(n.args[0])));
    return h == "approx-even" ? approx_even(cm) : approx_odd(cm);
  }
  throw Error(ErrorKind::kParse, "unknown decider `" + h + "`");
}

}  // namespace

DeciderEq parse_decider(std::string_view text) { return build(Parser(text).parse()); }

std::string decider_grammar() {
  return "expr := bottom | top | parity\n"
         "      | singular(PRED)          PRED: even, odd, prime, all, none\n"
         "      | meet(expr, expr)\n"
         "      | complement(expr)\n"
         "      | partition(FILE)\n"
         "      | nonhalt(N)\n"
         "      | approx-even(MACHINE) | approx-odd(MACHINE)\n";
}

}  // namespace equlat::cli
