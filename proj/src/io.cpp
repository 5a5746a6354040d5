#include "cmt/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cmt/errors.hpp"

namespace cmt {

namespace {

struct LineReader {
  std::istream& in;
  int lineno = 0;
  std::vector<std::string> tokens;

  // next nonempty line, comments stripped; false at EOF
  bool next() {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      tokens.clear();
      std::istringstream ss(line);
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw io_error("line " + std::to_string(lineno) + ": " + msg);
  }
};

int parse_int(LineReader& r, const std::string& tok, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) r.fail(std::string("bad ") + what + " '" + tok + "'");
  return v;
}

// consumes the vocabulary block; leaves r.tokens holding the first line after
// it (or empty at EOF)
VocabPtr read_vocab_block(LineReader& r) {
  if (!r.next() || r.tokens[0] != "vocabulary") r.fail("expected 'vocabulary'");
  if (r.tokens.size() != 1) r.fail("unexpected tokens after 'vocabulary'");
  auto v = std::make_shared<Vocabulary>();
  while (r.next()) {
    const std::string& head = r.tokens[0];
    try {
      if (head == "predicate") {
        if (r.tokens.size() != 3) r.fail("expected: predicate NAME ARITY");
        v->add_predicate(r.tokens[1], parse_int(r, r.tokens[2], "arity"));
      } else if (head == "function") {
        if (r.tokens.size() != 3) r.fail("expected: function NAME ARITY");
        v->add_function(r.tokens[1], parse_int(r, r.tokens[2], "arity"));
      } else if (head == "constant") {
        if (r.tokens.size() != 2) r.fail("expected: constant NAME");
        v->add_constant(r.tokens[1]);
      } else {
        return v;
      }
    } catch (const vocab_error& e) {
      r.fail(e.what());
    }
  }
  r.tokens.clear();
  return v;
}

int parse_elem(LineReader& r, const std::string& tok, int universe) {
  int e = parse_int(r, tok, "element");
  if (e >= universe) r.fail("element " + tok + " outside universe of size " + std::to_string(universe));
  return e;
}

// the two structure readers differ only in how a predicate value is read
template <class Structure, class ReadValue>
Structure read_structure_impl(std::istream& in, ReadValue read_value) {
  LineReader r{in, 0, {}};
  VocabPtr vocab = read_vocab_block(r);
  if (r.tokens.empty() || r.tokens[0] != "universe") r.fail("expected 'universe N'");
  if (r.tokens.size() != 2) r.fail("expected 'universe N'");
  int n = parse_int(r, r.tokens[1], "universe size");
  if (n < 1) r.fail("universe must have at least one element");

  Structure m(vocab, n);
  std::vector<std::vector<char>> seen_pred, seen_fun;
  for (const auto& p : vocab->predicates()) seen_pred.emplace_back(table_size(n, p.arity), 0);
  for (const auto& f : vocab->functions()) seen_fun.emplace_back(table_size(n, f.arity), 0);
  std::vector<char> seen_const(vocab->constants().size(), 0);

  std::vector<int> args;
  while (r.next()) {
    const std::string& name = r.tokens[0];
    if (int p = vocab->predicate_index(name); p >= 0) {
      int arity = vocab->predicates()[p].arity;
      if ((int)r.tokens.size() != arity + 3 || r.tokens[arity + 1] != "=")
        r.fail("expected: " + name + (arity ? " ARGS = VALUE" : " = VALUE"));
      args.clear();
      for (int i = 0; i < arity; ++i) args.push_back(parse_elem(r, r.tokens[1 + i], n));
      size_t idx = flat_index(args, n);
      if (seen_pred[p][idx]) r.fail("duplicate entry for " + name);
      seen_pred[p][idx] = 1;
      m.pred_table(p)[idx] = read_value(r, r.tokens[arity + 2]);
    } else if (int f = vocab->function_index(name); f >= 0) {
      int arity = vocab->functions()[f].arity;
      if ((int)r.tokens.size() != arity + 3 || r.tokens[arity + 1] != "->") r.fail("expected: " + name + " ARGS -> ELEM");
      args.clear();
      for (int i = 0; i < arity; ++i) args.push_back(parse_elem(r, r.tokens[1 + i], n));
      size_t idx = flat_index(args, n);
      if (seen_fun[f][idx]) r.fail("duplicate entry for " + name);
      seen_fun[f][idx] = 1;
      m.fun_table(f)[idx] = parse_elem(r, r.tokens[arity + 2], n);
    } else if (int c = vocab->constant_index(name); c >= 0) {
      if (r.tokens.size() != 3 || r.tokens[1] != "=") r.fail("expected: " + name + " = ELEM");
      if (seen_const[c]) r.fail("duplicate entry for " + name);
      seen_const[c] = 1;
      m.set_constant(c, parse_elem(r, r.tokens[2], n));
    } else {
      r.fail("unknown symbol '" + name + "'");
    }
  }

  for (size_t p = 0; p < seen_pred.size(); ++p)
    for (size_t idx = 0; idx < seen_pred[p].size(); ++idx)
      if (!seen_pred[p][idx]) {
        unflatten(idx, n, vocab->predicates()[p].arity, args);
        std::string entry = vocab->predicates()[p].name;
        for (int a : args) entry += " " + std::to_string(a);
        throw io_error("missing entry: " + entry);
      }
  for (size_t f = 0; f < seen_fun.size(); ++f)
    for (size_t idx = 0; idx < seen_fun[f].size(); ++idx)
      if (!seen_fun[f][idx]) {
        unflatten(idx, n, vocab->functions()[f].arity, args);
        std::string entry = vocab->functions()[f].name;
        for (int a : args) entry += " " + std::to_string(a);
        throw io_error("missing entry: " + entry);
      }
  for (size_t c = 0; c < seen_const.size(); ++c)
    if (!seen_const[c]) throw io_error("missing entry: " + vocab->constants()[c].name);
  return m;
}

}  // namespace

VocabPtr read_vocabulary(std::istream& in) {
  LineReader r{in, 0, {}};
  VocabPtr v = read_vocab_block(r);
  if (!r.tokens.empty()) r.fail("unexpected line after vocabulary block");
  return v;
}

GeneralStructure read_general_structure(std::istream& in) {
  return read_structure_impl<GeneralStructure>(in, [](LineReader& r, const std::string& tok) {
    auto v = Value::parse(tok);
    if (!v) r.fail("bad value '" + tok + "' (want a rational in [0,1])");
    return *v;
  });
}

FOStructure read_fo_structure(std::istream& in) {
  return read_structure_impl<FOStructure>(in, [](LineReader& r, const std::string& tok) -> unsigned char {
    if (tok == "true") return 1;
    if (tok == "false") return 0;
    r.fail("bad value '" + tok + "' (want true or false)");
  });
}

namespace {

void write_vocab_block(std::ostream& out, const Vocabulary& v) {
  out << "vocabulary\n";
  for (const auto& p : v.predicates()) out << "  predicate " << p.name << ' ' << p.arity << '\n';
  for (const auto& f : v.functions()) out << "  function " << f.name << ' ' << f.arity << '\n';
  for (const auto& c : v.constants()) out << "  constant " << c.name << '\n';
}

template <class Structure, class ShowValue>
void write_structure_impl(std::ostream& out, const Structure& m, ShowValue show) {
  write_vocab_block(out, m.vocab());
  out << "universe " << m.universe() << '\n';
  std::vector<int> args;
  for (size_t p = 0; p < m.vocab().predicates().size(); ++p) {
    const auto& pr = m.vocab().predicates()[p];
    args.assign(pr.arity, 0);
    size_t idx = 0;
    do {
      out << pr.name;
      for (int a : args) out << ' ' << a;
      out << " = " << show(m.pred_table((int)p)[idx]) << '\n';
      ++idx;
    } while (next_tuple(args, m.universe()));
  }
  for (size_t f = 0; f < m.vocab().functions().size(); ++f) {
    const auto& fn = m.vocab().functions()[f];
    args.assign(fn.arity, 0);
    size_t idx = 0;
    do {
      out << fn.name;
      for (int a : args) out << ' ' << a;
      out << " -> " << m.fun_table((int)f)[idx] << '\n';
      ++idx;
    } while (next_tuple(args, m.universe()));
  }
  for (size_t c = 0; c < m.vocab().constants().size(); ++c)
    out << m.vocab().constants()[c].name << " = " << m.constant((int)c) << '\n';
}

}  // namespace

void write_vocabulary(std::ostream& out, const Vocabulary& v) { write_vocab_block(out, v); }

void write_general_structure(std::ostream& out, const GeneralStructure& m) {
  write_structure_impl(out, m, [](Value v) { return v.str(); });
}

void write_fo_structure(std::ostream& out, const FOStructure& k) {
  write_structure_impl(out, k, [](unsigned char b) { return b ? "true" : "false"; });
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  return in;
}

}  // namespace

VocabPtr load_vocabulary(const std::string& path) {
  auto in = open_in(path);
  return read_vocabulary(in);
}

GeneralStructure load_general_structure(const std::string& path) {
  auto in = open_in(path);
  return read_general_structure(in);
}

FOStructure load_fo_structure(const std::string& path) {
  auto in = open_in(path);
  return read_fo_structure(in);
}

void save_general_structure(const std::string& path, const GeneralStructure& m) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  write_general_structure(out, m);
  if (!out.flush()) throw io_error("write failed: " + path);
}

void save_fo_structure(const std::string& path, const FOStructure& k) {
  std::ofstream out(path);
  if (!out) throw io_error("cannot open " + path + " for writing");
  write_fo_structure(out, k);
  if (!out.flush()) throw io_error("write failed: " + path);
}

}  // namespace cmt
