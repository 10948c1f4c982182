#include "shirshov/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "shirshov/bounds.hpp"
#include "shirshov/divisibility.hpp"
#include "shirshov/growth.hpp"
#include "shirshov/height.hpp"
#include "shirshov/morphisms.hpp"
#include "shirshov/posets.hpp"
#include "shirshov/selective.hpp"
#include "shirshov/tableaux.hpp"
#include "shirshov/words.hpp"

namespace shirshov {

namespace {

using Json = nlohmann::ordered_json;

// A report is a list of sections; every row of a section has the same keys.
using Section = std::vector<Json>;
using Report = std::vector<Section>;

Json big(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return static_cast<std::int64_t>(v);
  return v.str();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_string()) {
    out.emplace_back(prefix, j.get<std::string>());
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
  bool first_section = true;
  for (const Section& section : report) {
    if (section.empty()) continue;
    if (format == OutputFormat::jsonl) {
      for (const Json& row : section) out << row.dump() << '\n';
      continue;
    }
    if (!first_section) out << '\n';
    first_section = false;
    std::vector<std::vector<std::pair<std::string, std::string>>> flat;
    for (const Json& row : section) {
      flat.emplace_back();
      flatten(row, "", flat.back());
    }
    const auto& header = flat.front();
    if (format == OutputFormat::csv) {
      for (std::size_t c = 0; c < header.size(); ++c) out << (c ? "," : "") << csv_field(header[c].first);
      out << '\n';
      for (const auto& row : flat) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c].second);
        out << '\n';
      }
      continue;
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].first.size();
    for (const auto& row : flat) {
      for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].second.size());
    }
    auto line = [&](auto&& cell) {
      std::string s;
      for (std::size_t c = 0; c < header.size(); ++c) {
        std::string v = cell(c);
        if (c + 1 < header.size()) v.resize(width[c], ' ');
        s += (c ? "  " : "") + v;
      }
      out << s << '\n';
    };
    line([&](std::size_t c) { return header[c].first; });
    for (const auto& row : flat) line([&](std::size_t c) { return c < row.size() ? row[c].second : std::string(); });
  }
}

class Params {
 public:
  explicit Params(const RunConfig& c) : c_(c) {}

  bool has(const std::string& k) const { return c_.params.count(k) != 0; }

  const std::string& str(const std::string& k) const {
    auto it = c_.params.find(k);
    if (it == c_.params.end()) throw std::invalid_argument("missing --" + k);
    return it->second;
  }

  std::string str_or(const std::string& k, const std::string& def) const { return has(k) ? str(k) : def; }

  std::size_t size(const std::string& k) const {
    const std::string& s = str(k);
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
      v = std::stoull(s, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (s.empty() || pos != s.size()) throw std::invalid_argument("--" + k + " needs a nonnegative integer");
    return static_cast<std::size_t>(v);
  }

  std::size_t size_or(const std::string& k, std::size_t def) const { return has(k) ? size(k) : def; }

  bool flag(const std::string& k) const { return has(k) && str(k) == "true"; }

  Word word(const std::string& k = "word") const {
    if (has("l")) return Word::parse(str(k), Alphabet(size("l")));
    return Word::parse(str(k));
  }

  std::string file(const std::string& k = "in") const {
    std::ifstream in(str(k));
    if (!in) throw std::invalid_argument("cannot read " + str(k));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  const RunConfig& config() const { return c_; }

 private:
  const RunConfig& c_;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ';' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<Word> parse_word_list(const std::string& s, std::optional<Alphabet> a) {
  std::vector<Word> out;
  for (const auto& t : split_list(s)) out.push_back(Word::parse(t, a));
  return out;
}

// Brings words onto the largest alphabet among them.
Alphabet unify(std::vector<Word*> words) {
  std::size_t l = 1;
  for (Word* w : words) l = std::max(l, w->alphabet().size());
  for (Word* w : words) *w = w->with_alphabet(Alphabet(l));
  return Alphabet(l);
}

std::string join_blocks(const Word& w, const DivisibilityWitness& wit) {
  std::string s;
  for (std::size_t i = 0; i < wit.blocks.size(); ++i) {
    if (i) s += '|';
    s += w.substr(wit.blocks[i].begin, wit.blocks[i].end - wit.blocks[i].begin).to_string();
  }
  return s;
}

std::string tableau_rows(const Tableau& t) {
  std::string s;
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) s += '/';
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) s += (c ? " " : "") + std::to_string(t.rows()[r][c]);
  }
  return s;
}

std::string shape_text(const Shape& s) {
  std::string out;
  for (std::size_t i = 0; i < s.rows().size(); ++i) out += (i ? "," : "") + std::to_string(s.rows()[i]);
  return out;
}

Report cmd_divide(const Params& p) {
  const Word w = p.word();
  const std::size_t n = p.size("n");
  const DivisibilitySense sense = parse_sense(p.str_or("sense", "ordinary"));
  std::optional<std::vector<Word>> powers;
  if (sense == DivisibilitySense::strong) {
    powers = primitive_powers(w.alphabet(), p.size_or("period", 1), p.size_or("k", 1));
  }
  std::optional<std::size_t> d;
  if (p.has("d")) d = p.size("d");
  const auto wit = is_n_divisible(w, n, sense, powers, d);
  Json row;
  row["word"] = w.to_string();
  row["n"] = n;
  row["sense"] = to_string(sense);
  row["divisible"] = wit.has_value();
  std::string witness;
  std::string blocks;
  if (wit) {
    if (sense == DivisibilitySense::tail) {
      for (std::size_t i = 0; i < wit->blocks.size(); ++i) {
        witness += (i ? "|" : "") + w.substr(wit->blocks[i].begin).to_string();
      }
    } else {
      witness = join_blocks(w, *wit);
    }
    for (std::size_t i = 0; i < wit->blocks.size(); ++i) {
      blocks += (i ? " " : "") + std::to_string(wit->blocks[i].begin) + "-" + std::to_string(wit->blocks[i].end);
    }
  }
  row["witness"] = witness;
  row["blocks"] = blocks;
  return {{row}};
}

Report cmd_reduce(const Params& p) {
  const Word w = p.word();
  const std::size_t n = p.size("n");
  const std::size_t d = p.size("d");
  const bool reducible = is_nd_reducible(w, n, d);
  const auto power = find_period_power(w, d);
  const auto div = is_n_divisible(w, n, DivisibilitySense::ordinary);
  Json row;
  row["word"] = w.to_string();
  row["n"] = n;
  row["d"] = d;
  row["reducible"] = reducible;
  row["power"] = power ? power->root.to_string() + "^" + std::to_string(d) + "@" + std::to_string(power->start) : "";
  row["division"] = div ? join_blocks(w, *div) : "";
  return {{row}};
}

Report cmd_oracle(const Params& p) {
  const std::string kind = p.str_or("kind", "nonreducible");
  Json row;
  if (kind == "nonreducible") {
    const auto r = max_nonreducible_length(p.size("n"), p.size("d"), p.size("l"), p.config().budget);
    row["params"] = {{"n", r.params.n}, {"d", r.params.d}, {"l", r.params.l}};
    row["oracle_value"] = r.length;
    row["bound_values"] = {{"psi", big(r.psi)}, {"psi_log2", big(r.psi_log2)}};
    row["witness"] = r.witness.to_string();
    row["nodes_explored"] = r.nodes_explored;
  } else if (kind == "process") {
    const std::size_t pp = p.size("p");
    const std::size_t k = p.size("k");
    const auto r = max_process_sequence_length(pp, k, p.config().budget);
    std::string words;
    for (const auto& s : r.as_words(k)) words += (words.empty() ? "" : " ") + s;
    row["params"] = {{"p", pp}, {"k", k}};
    row["oracle_value"] = r.length;
    row["bound_values"] = {{"p_pow_k_minus_1_minus_1", big(boost::multiprecision::pow(BigInt(pp), static_cast<unsigned>(k - 1)) - 1)}};
    row["witness"] = words;
    row["nodes_explored"] = r.states_explored;
  } else {
    throw std::invalid_argument("unknown oracle kind: " + kind);
  }
  return {{row}};
}

Report cmd_bounds(const Params& p) {
  const std::string which = p.str("which");
  Json row;
  row["which"] = which;
  BigInt v;
  auto put = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys) row[k] = p.size(k);
  };
  if (which == "psi" || which == "psi_log2") {
    put({"n", "d", "l"});
    BoundParams bp{p.size("n"), p.size("d"), p.size("l")};
    v = which == "psi" ? psi_bound(bp) : psi_log2_bound(bp);
  } else if (which == "phi") {
    put({"n", "l"});
    v = phi_bound(p.size("n"), p.size("l"));
  } else if (which == "upsilon") {
    put({"n", "l"});
    v = upsilon_bound(p.size("n"), p.size("l"));
  } else if (which == "upsilon_coding") {
    put({"n", "l"});
    v = upsilon_coding_bound(p.size("n"), p.size("l"));
  } else if (which == "p_nd") {
    put({"n", "d"});
    v = p_nd(p.size("n"), p.size("d"));
  } else if (which == "q_n") {
    put({"n"});
    v = q_n(p.size("n"));
  } else if (which == "beth2" || which == "beth3" || which == "beth_n1") {
    put({"l", "n"});
    const PeriodFamily f = which == "beth2"   ? PeriodFamily::two
                           : which == "beth3" ? PeriodFamily::three
                                              : PeriodFamily::degree_minus_one;
    v = beth_bound(f, p.size("l"), p.size("n"));
  } else if (which == "alpha") {
    put({"n", "l"});
    v = alpha_lower(p.size("n"), p.size("l"));
  } else {
    throw std::invalid_argument("unknown bound: " + which);
  }
  row["value"] = big(v);
  return {{row}};
}

Report cmd_height(const Params& p) {
  Word w = p.word();
  std::vector<Word> base = parse_word_list(p.str("base"), std::nullopt);
  std::vector<Word*> all{&w};
  for (Word& b : base) all.push_back(&b);
  unify(all);
  Json row;
  row["word"] = w.to_string();
  row["base"] = p.str("base");
  const auto h = word_height(w, base);
  row["height"] = h ? Json(*h) : Json("none");
  if (p.has("pad")) {
    const auto e = essential_height(w, base, p.size("pad"), p.size_or("exponent", 2));
    row["pad"] = p.size("pad");
    row["essential_height"] = e ? Json(*e) : Json("none");
  }
  return {{row}};
}

Report cmd_selective(const Params& p) {
  const Word w = p.word();
  const std::size_t n = p.size("n");
  const std::size_t period = p.size("period");
  const std::size_t k = p.size_or("k", 2 * n);
  std::vector<PeriodicFactor> chosen;
  const std::size_t small = small_selective_height(w, period, k, &chosen);
  const std::size_t large = large_selective_height(w, period, k, n);
  std::string wit;
  for (const auto& f : chosen) {
    wit += (wit.empty() ? "" : " ") + f.root.to_string() + "@" + std::to_string(f.begin);
  }
  Json row;
  row["word"] = w.to_string();
  row["period"] = period;
  row["boundary"] = k;
  row["n"] = n;
  row["small"] = small;
  row["large"] = large;
  row["small_witness"] = wit;
  return {{row}};
}

Report cmd_rsk(const Params& p) {
  const Permutation pi = Permutation::parse(p.str("perm"));
  const RskPair r = rsk(pi);
  Json row;
  row["perm"] = pi.to_string();
  row["P"] = tableau_rows(r.P);
  row["Q"] = tableau_rows(r.Q);
  row["shape"] = shape_text(r.P.shape());
  row["rows"] = r.P.rows().size();
  row["lds"] = longest_decreasing_subsequence(pi);
  row["lis"] = longest_increasing_subsequence(pi);
  row["inverse_ok"] = rsk_inverse(r.P, r.Q) == pi;
  return {{row}};
}

Report cmd_count(const Params& p) {
  const std::string what = p.str_or("what", "xi");
  Json row;
  if (what == "xi") {
    const std::size_t n = p.size("n");
    const std::size_t k = p.size("k");
    const XiMethod m = parse_xi_method(p.str_or("method", "tableaux"));
    row["n"] = n;
    row["k"] = k;
    row["method"] = to_string(m);
    row["value"] = xi_count(n, k, m);
  } else if (what == "delta") {
    row["n"] = p.size("n");
    row["k"] = p.size("k");
    row["value"] = count_tableaux_max_rows(p.size("n"), p.size("k"));
  } else if (what == "epsilon") {
    const std::size_t n = p.size("n");
    const std::size_t k = p.size("k");
    const auto census = permutation_poset_census(n);
    if (k > n) throw std::invalid_argument("--k exceeds --n");
    row["n"] = n;
    row["k"] = k;
    row["value"] = count_permutation_posets(n, k);
    row["labeled"] = census.permutations[k];
    row["bound"] = epsilon_bound(n, k).str();
  } else if (what == "multilinear") {
    row["l"] = p.size("l");
    row["n"] = p.size("n");
    row["k"] = p.size("k");
    row["value"] = multilinear_word_count(p.size("l"), p.size("n"), p.size("k"));
  } else {
    throw std::invalid_argument("unknown count: " + what);
  }
  return {{row}};
}

Json poset_row(const FinitePoset& fp) {
  const Antichain a = max_antichain(fp);
  const auto chains = min_chain_cover(fp);
  std::string anti;
  for (std::size_t x : a.elements) anti += (anti.empty() ? "" : " ") + std::to_string(x + 1);
  std::string cover;
  for (const auto& c : chains) {
    if (!cover.empty()) cover += " | ";
    for (std::size_t i = 0; i < c.size(); ++i) cover += (i ? "<" : "") + std::to_string(c[i] + 1);
  }
  Json row;
  row["size"] = fp.size();
  row["covers"] = fp.covers().size();
  row["max_antichain"] = a.size;
  row["antichain"] = anti;
  row["chains"] = chains.size();
  row["chain_cover"] = cover;
  return row;
}

Report cmd_posets(const Params& p) {
  if (p.flag("census")) {
    const std::size_t n = p.size("n");
    const auto c = permutation_poset_census(n);
    Section s;
    for (std::size_t k = 1; k <= n; ++k) {
      Json row;
      row["n"] = n;
      row["k"] = k;
      row["classes"] = c.classes[k];
      row["permutations"] = c.permutations[k];
      row["bound"] = epsilon_bound(n, k).str();
      s.push_back(row);
    }
    return {s};
  }
  if (p.flag("demo")) {
    const auto d = non_injectivity_demo();
    Json row = poset_row(d.poset);
    row["first_generates"] = d.first_generates;
    row["second_generates"] = d.second_generates;
    row["pairs_isomorphic"] = d.pairs_isomorphic;
    return {{row}};
  }
  if (p.flag("random")) {
    const std::size_t n = p.size("n");
    if (n > 24) throw std::invalid_argument("random posets limited to 24 points");
    const double density = p.has("density") ? std::stod(p.str("density")) : 0.3;
    if (!(density >= 0.0 && density <= 1.0)) throw std::invalid_argument("--density must lie in [0, 1]");
    std::mt19937_64 rng(p.config().seed);
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (static_cast<double>(rng() >> 11) * 0x1.0p-53 < density) rel.emplace_back(i, j);
      }
    }
    const FinitePoset fp = FinitePoset::from_relations(n, rel);
    Json row = poset_row(fp);
    row["seed"] = p.config().seed;
    row["bruteforce_antichain"] = max_antichain_bruteforce(fp).size;
    return {{row}};
  }
  return {{poset_row(FinitePoset::parse_text(p.file()))}};
}

Morphism load_morphism(const Params& p) {
  if (p.has("in")) return Morphism::parse(p.file());
  const std::string name = p.str_or("name", "thue-ternary");
  if (name == "thue-morse") return thue_morse_morphism();
  if (name == "thue-ternary") return thue_ternary_morphism();
  if (name == "fibonacci") return fibonacci_morphism();
  throw std::invalid_argument("unknown morphism: " + name);
}

Report cmd_morphism(const Params& p) {
  const Morphism m = load_morphism(p);
  const CrochemoreReport c = crochemore_test(m);
  Json row;
  row["square_free"] = c.square_free;
  row["k_used"] = c.k_used;
  row["M"] = c.max_len;
  row["m"] = c.min_len;
  row["words_checked"] = c.words_checked;
  row["counterexample"] = c.counterexample ? c.counterexample->to_string() : "";
  row["thue2_images_square_free"] = c.thue2_images_square_free;
  row["thue2_images_not_nested"] = c.thue2_images_not_nested;
  Report r{{row}};
  if (p.has("word")) {
    Json a;
    const Word w = Word::parse(p.str("word"), m.source());
    const Word img = m.apply(w);
    a["word"] = w.to_string();
    a["image"] = img.to_string();
    a["image_has_square"] = has_square(img).has_value();
    r.push_back({a});
  }
  if (p.has("iterate")) {
    Json it;
    const Word w = m.iterate(1, p.size("iterate"));
    it["iterate"] = p.size("iterate");
    it["length"] = w.size();
    it["has_square"] = has_square(w).has_value();
    it["has_cube"] = has_cube(w).has_value();
    it["prefix"] = w.substr(0, 64).to_string();
    r.push_back({it});
  }
  return r;
}

MonomialAlgebraSpec load_spec(const Params& p) {
  if (p.has("in")) return MonomialAlgebraSpec::parse(p.file());
  const Alphabet a(p.size_or("l", 2));
  return MonomialAlgebraSpec(a, p.has("forbidden") ? parse_word_list(p.str("forbidden"), a) : std::vector<Word>{});
}

Report cmd_growth(const Params& p) {
  const MonomialAlgebraSpec spec = load_spec(p);
  const std::size_t n = p.size_or("n", 12);
  const auto V = growth_function(spec, n);
  Section rows;
  for (std::size_t k = 0; k <= n; ++k) {
    Json r;
    r["n"] = k;
    r["V"] = big(V[k]);
    rows.push_back(r);
  }
  const GrowthClass g = classify_growth(spec);
  Json verdict;
  verdict["classification"] = to_string(g);
  verdict["exponential"] = g.exponential;
  verdict["degree"] = g.degree;
  verdict["cyclic_components"] = g.cyclic_components;
  if (n >= 8) {
    std::ostringstream e;
    e.setf(std::ios::fixed);
    e.precision(6);
    e << gk_dimension_estimate(spec, n);
    verdict["gk_estimate"] = e.str();
  }
  return {rows, {verdict}};
}

Report cmd_complexity(const Params& p) {
  const Word w = p.word();
  const std::size_t n = p.size_or("n", w.size());
  const auto c = complexity_function(w, n);
  Section rows;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Json r;
    r["n"] = i + 1;
    r["p"] = c[i];
    rows.push_back(r);
  }
  Json summary;
  summary["length"] = w.size();
  summary["balanced"] = is_balanced(w);
  return {rows, {summary}};
}

using Handler = Report (*)(const Params&);

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"divide", cmd_divide},   {"reduce", cmd_reduce},     {"oracle", cmd_oracle},   {"bounds", cmd_bounds},
      {"height", cmd_height},   {"selective", cmd_selective}, {"rsk", cmd_rsk},       {"count", cmd_count},
      {"posets", cmd_posets},   {"morphism", cmd_morphism}, {"growth", cmd_growth},   {"complexity", cmd_complexity},
  };
  return h;
}

const std::vector<std::string> kValueOptions{"n",      "d",     "l",    "k",    "p",     "word",      "in",
                                             "method", "which", "sense", "period", "pad", "exponent", "base",
                                             "perm",   "kind",  "what", "forbidden", "name", "iterate", "density"};
const std::vector<std::string> kFlags{"census", "demo", "random"};

OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::table;
  if (s == "csv") return OutputFormat::csv;
  if (s == "jsonl") return OutputFormat::jsonl;
  throw std::invalid_argument("unknown format: " + s);
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, h] : handlers()) v.push_back(name);
    return v;
  }();
  return names;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Handler handler = nullptr;
  for (const auto& [name, h] : handlers()) {
    if (name == config.subcommand) handler = h;
  }
  if (handler == nullptr) {
    err << "unknown subcommand: " << config.subcommand << '\n';
    return exit_code::unknown_subcommand;
  }
  try {
    const Report report = handler(Params(config));
    write_report(report, config.format, out);
    return exit_code::ok;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted after " << e.nodes() << " nodes: " << e.what() << '\n';
    return exit_code::budget_exhausted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain_error;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain_error;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain_error;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 4;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  if (argc < 2) {
    err << "usage: shirshov <subcommand> [options]\nsubcommands:";
    for (const auto& s : subcommands()) err << ' ' << s;
    err << '\n';
    return exit_code::unknown_subcommand;
  }
  const std::string sub = argv[1];
  if (sub == "--help" || sub == "-h") {
    out << "usage: shirshov <subcommand> [options]\nsubcommands:";
    for (const auto& s : subcommands()) out << ' ' << s;
    out << '\n';
    return exit_code::ok;
  }
  if (std::find(subcommands().begin(), subcommands().end(), sub) == subcommands().end()) {
    err << "unknown subcommand: " << sub << '\n';
    return exit_code::unknown_subcommand;
  }
  CLI::App app("shirshov " + sub);
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::string format = "table";
  std::uint64_t budget = 10'000'000;
  std::uint64_t seed = 1;
  for (const auto& name : kValueOptions) app.add_option("--" + name, values[name]);
  for (const auto& name : kFlags) app.add_flag("--" + name, flags[name]);
  app.add_option("--format", format)->check(CLI::IsMember({"table", "csv", "jsonl"}));
  app.add_option("--budget", budget);
  app.add_option("--seed", seed);
  std::vector<std::string> args;
  for (int i = argc - 1; i >= 2; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain_error;
  }
  RunConfig config;
  config.subcommand = sub;
  for (const auto& name : kValueOptions) {
    if (app.get_option("--" + name)->count() > 0) config.params[name] = values[name];
  }
  for (const auto& name : kFlags) {
    if (flags[name]) config.params[name] = "true";
  }
  config.format = parse_format(format);
  config.budget = budget;
  config.seed = seed;
  return run(config, out, err);
}

}  // namespace shirshov
