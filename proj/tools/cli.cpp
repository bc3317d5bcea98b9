// Copyright 2026 The acsets Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acsets/acset_cat.hpp"
#include "acsets/bench/harness.hpp"
#include "acsets/cospan.hpp"
#include "acsets/error.hpp"
#include "acsets/io/json.hpp"
#include "acsets/migration.hpp"

namespace acsets::cli {

namespace {

namespace fs = std::filesystem;

// Malformed flag values; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool quiet = false;
  std::uint64_t seed = 20200707;
};

InstancePtr load_instance(const std::string& path) { return share(io::read_instance_file(path)); }

void emit(Context& ctx, const std::string& output, const std::string& text) {
  if (output.empty()) {
    ctx.out << text;
  } else {
    io::write_text_file(output, text);
    if (!ctx.quiet) ctx.err << "wrote " << output << "\n";
  }
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

// map-attrs --expr T=op[:arg]

AttrFunction arith(ValueType type, const std::string& op, const std::string& arg) {
  if (type == ValueType::Int) {
    auto k = parse_number<std::int64_t>(arg);
    if (!k) throw UsageError("'" + arg + "' is not an integer");
    if (op == "mul") return [k = *k](const Value& v) { return Value(v.as_int() * k); };
    return [k = *k](const Value& v) { return Value(v.as_int() + k); };
  }
  if (type == ValueType::Float) {
    auto k = parse_number<double>(arg);
    if (!k) throw UsageError("'" + arg + "' is not a number");
    if (op == "mul") return [k = *k](const Value& v) { return Value(v.as_float() * k); };
    return [k = *k](const Value& v) { return Value(v.as_float() + k); };
  }
  fail(Errc::TypeMismatch, op + " needs a numeric attribute type");
}

Value to_float(const Value& v) {
  switch (*v.type()) {
    case ValueType::Int:
      return Value(static_cast<double>(v.as_int()));
    case ValueType::Float:
      return v;
    case ValueType::Bool:
      return Value(v.as_bool() ? 1.0 : 0.0);
    case ValueType::String:
      if (auto d = parse_number<double>(v.as_string())) return Value(*d);
      break;
  }
  fail(Errc::TypeMismatch, "cannot convert " + v.to_display() + " to float");
}

Value to_int(const Value& v) {
  switch (*v.type()) {
    case ValueType::Int:
      return v;
    case ValueType::Float: {
      const double d = std::trunc(v.as_float());
      if (std::isfinite(d) && std::abs(d) < 9.2e18) return Value(static_cast<std::int64_t>(d));
      break;
    }
    case ValueType::Bool:
      return Value(std::int64_t{v.as_bool() ? 1 : 0});
    case ValueType::String:
      if (auto i = parse_number<std::int64_t>(v.as_string())) return Value(*i);
      break;
  }
  fail(Errc::TypeMismatch, "cannot convert " + v.to_display() + " to int");
}

Value to_text(const Value& v) {
  if (v.type() == ValueType::String) return v;
  return Value(v.to_display());
}

void add_expression(const Instance& x, const std::string& expr, std::map<std::string, AttrFunction>& gammas,
                    Typing& typing) {
  const auto eq = expr.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("expected TYPE=OP[:ARG], got '" + expr + "'");
  const std::string name = expr.substr(0, eq);
  const std::string rhs = expr.substr(eq + 1);
  const auto colon = rhs.find(':');
  const std::string op = rhs.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : rhs.substr(colon + 1);
  x.schema().attrtype(name);
  if (gammas.count(name)) throw UsageError("attribute type '" + name + "' mapped twice");
  const ValueType type = x.typing().at(name);
  const bool wants_arg = op == "mul" || op == "add";
  if (wants_arg == arg.empty()) {
    throw UsageError(wants_arg ? "'" + op + "' needs an argument" : "'" + op + "' takes no argument");
  }
  if (wants_arg) {
    gammas[name] = arith(type, op, arg);
  } else if (op == "neg") {
    if (type == ValueType::Int) {
      gammas[name] = [](const Value& v) { return Value(-v.as_int()); };
    } else if (type == ValueType::Float) {
      gammas[name] = [](const Value& v) { return Value(-v.as_float()); };
    } else {
      fail(Errc::TypeMismatch, "neg needs a numeric attribute type");
    }
  } else if (op == "float") {
    gammas[name] = to_float;
    typing[name] = ValueType::Float;
  } else if (op == "int") {
    gammas[name] = to_int;
    typing[name] = ValueType::Int;
  } else if (op == "string") {
    gammas[name] = to_text;
    typing[name] = ValueType::String;
  } else {
    throw UsageError("unknown operation '" + op + "' (mul, add, neg, float, int, string)");
  }
}

// filter --pred "T<=200"

template <class T>
bool compare(const T& a, const std::string& op, const T& b) {
  if (op == "<=") return a <= b;
  if (op == ">=") return a >= b;
  if (op == "<") return a < b;
  if (op == ">") return a > b;
  if (op == "==") return a == b;
  return a != b;
}

void add_predicate(const Instance& x, const std::string& pred, std::map<std::string, AttrPredicate>& preds) {
  static const char* const kOps[] = {"<=", ">=", "==", "!=", "<", ">"};
  std::size_t at = std::string::npos;
  std::string op;
  for (const char* candidate : kOps) {
    auto pos = pred.find(candidate);
    if (pos != std::string::npos && (pos < at || (pos == at && std::string(candidate).size() > op.size()))) {
      at = pos;
      op = candidate;
    }
  }
  if (at == std::string::npos || at == 0) throw UsageError("expected TYPE<op>LITERAL, got '" + pred + "'");
  const std::string name = pred.substr(0, at);
  std::string lit = pred.substr(at + op.size());
  x.schema().attrtype(name);
  if (preds.count(name)) throw UsageError("attribute type '" + name + "' filtered twice");
  switch (x.typing().at(name)) {
    case ValueType::Int:
      if (auto k = parse_number<std::int64_t>(lit)) {
        preds[name] = [op, k = *k](const Value& v) { return compare(v.as_int(), op, k); };
        return;
      }
      if (auto d = parse_number<double>(lit)) {
        preds[name] = [op, d = *d](const Value& v) { return compare(static_cast<double>(v.as_int()), op, d); };
        return;
      }
      throw UsageError("'" + lit + "' is not a number");
    case ValueType::Float:
      if (auto d = parse_number<double>(lit)) {
        preds[name] = [op, d = *d](const Value& v) { return compare(v.as_float(), op, d); };
        return;
      }
      throw UsageError("'" + lit + "' is not a number");
    case ValueType::String:
      if (lit.size() >= 2 && lit.front() == '"' && lit.back() == '"') lit = lit.substr(1, lit.size() - 2);
      preds[name] = [op, lit](const Value& v) { return compare(v.as_string(), op, lit); };
      return;
    case ValueType::Bool: {
      if (op != "==" && op != "!=") throw UsageError("bool attributes only support == and !=");
      if (lit != "true" && lit != "false") throw UsageError("'" + lit + "' is not true or false");
      const bool b = lit == "true";
      preds[name] = [op, b](const Value& v) { return compare(v.as_bool(), op, b); };
      return;
    }
  }
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string token = text.substr(start, comma - start);
    auto d = parse_number<double>(token);
    if (!d || *d < 1 || *d > 1e9 || std::floor(*d) != *d) throw UsageError("bad size '" + token + "'");
    sizes.push_back(static_cast<std::size_t>(*d));
    start = comma + 1;
  }
  return sizes;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    if (comma > start) out.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  return out;
}

ACSetMorphism load_morphism(const std::string& path, InstancePtr dom, InstancePtr codom) {
  return io::acset_morphism_from_json(io::read_json_file(path), std::move(dom), std::move(codom));
}

// info

void print_info(Context& ctx, const Instance& x) {
  const Schema& s = x.schema();
  ctx.out << "schema " << s.name() << "\n";
  for (std::size_t c = 0; c < s.obs().size(); ++c) {
    ctx.out << "  " << s.obs()[c] << ": " << x.nparts(ObId{c}) << " parts\n";
  }
  auto kind_name = [](Instance::IndexKind k) {
    return k == Instance::IndexKind::Unique ? "unique" : k == Instance::IndexKind::Inverse ? "inverse" : "none";
  };
  for (std::size_t h = 0; h < s.homs().size(); ++h) {
    const auto& hom = s.homs()[h];
    auto column = x.hom_column(HomId{h});
    std::map<Part, std::size_t> fibers;
    for (Part v : column) {
      if (v != 0) ++fibers[v];
    }
    std::size_t widest = 0;
    for (const auto& [v, n] : fibers) widest = std::max(widest, n);
    ctx.out << "  hom " << hom.name << ": " << s.ob_name(hom.dom) << " -> " << s.ob_name(hom.codom)
            << ", index " << kind_name(x.hom_index_kind(HomId{h})) << ", " << fibers.size()
            << " keys, largest fiber " << widest << "\n";
  }
  for (std::size_t a = 0; a < s.attrs().size(); ++a) {
    const auto& attr = s.attrs()[a];
    auto column = x.attr_column(AttrId{a});
    std::unordered_map<Value, std::size_t, ValueHash> fibers;
    std::size_t undefined = 0;
    for (const auto& v : column) {
      if (v.is_undefined()) {
        ++undefined;
      } else {
        ++fibers[v];
      }
    }
    std::size_t widest = 0;
    for (const auto& [v, n] : fibers) widest = std::max(widest, n);
    ctx.out << "  attr " << attr.name << ": " << s.ob_name(attr.dom) << " -> " << s.attrtype_name(attr.codom)
            << " (" << to_string(x.attr_type(AttrId{a})) << "), index " << kind_name(x.attr_index_kind(AttrId{a}))
            << ", " << fibers.size() << " keys, largest fiber " << widest << ", " << undefined << " undefined\n";
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Attributed C-set tool", "acsets"};
  app.require_subcommand(1);
  app.add_flag("-q,--quiet", ctx.quiet, "Suppress progress messages");
  app.add_option("--seed", ctx.seed, "Seed for randomized commands")->capture_default_str();

  std::string input;
  std::string output;
  std::string morphism;
  std::vector<std::string> exprs;
  std::vector<std::string> preds;
  std::string shape;
  std::vector<std::string> files;

  auto* validate = app.add_subcommand("validate", "Check an instance against its schema and equations");
  validate->add_option("input", input, "Instance JSON")->required();

  auto* info = app.add_subcommand("info", "Part counts and index statistics");
  info->add_option("input", input, "Instance JSON")->required();

  auto* migrate = app.add_subcommand("migrate", "Pull an instance back along a schema morphism");
  migrate->add_option("--morphism", morphism, "Schema morphism JSON")->required();
  migrate->add_option("--input", input, "Instance on the morphism's target")->required();
  migrate->add_option("--output", output, "Result path (default stdout)");

  auto* map_attrs = app.add_subcommand("map-attrs", "Apply a function to every value of an attribute type");
  map_attrs->add_option("--input", input, "Instance JSON")->required();
  map_attrs->add_option("--expr", exprs, "TYPE=OP[:ARG], OP one of mul, add, neg, float, int, string")
      ->required();
  map_attrs->add_option("--output", output, "Result path (default stdout)");

  auto* filter = app.add_subcommand("filter", "Delete parts whose attributes fail a predicate");
  filter->add_option("--input", input, "Instance JSON")->required();
  filter->add_option("--pred", preds, "TYPE<op>LITERAL, op one of < <= > >= == !=")->required();
  filter->add_option("--output", output, "Result path (default stdout)");

  auto* colimit = app.add_subcommand("colimit", "Colimit of instances");
  colimit->add_option("--shape", shape, "pushout: a f b g c with f: a -> b, g: a -> c; coproduct: x...")
      ->required()
      ->check(CLI::IsMember({"pushout", "coproduct"}));
  colimit->add_option("files", files, "Instances and morphisms")->required();
  colimit->add_option("--output", output, "Result path (default stdout)");

  auto* limit = app.add_subcommand("limit", "Limit of instances");
  limit->add_option("--shape", shape, "pullback: a f b g c with f: b -> a, g: c -> a; product: x...")
      ->required()
      ->check(CLI::IsMember({"pullback", "product"}));
  limit->add_option("files", files, "Instances and morphisms")->required();
  limit->add_option("--output", output, "Result path (default stdout)");

  auto* compose = app.add_subcommand("compose-cospans", "Compose two structured cospans by pushout");
  compose->add_option("files", files, "Two cospan JSON files")->required()->expected(2);
  compose->add_option("--output", output, "Result path (default stdout)");

  std::string suite = "all";
  std::string sizes = "1e3,1e4,1e5,1e6";
  std::string only;
  std::size_t reps = 20;
  auto* bench = app.add_subcommand("bench", "Time the engine against hand-written baselines");
  bench->add_option("--suite", suite, "all or one category")->capture_default_str();
  bench->add_option("--sizes", sizes, "Comma-separated sizes")->capture_default_str();
  bench->add_option("--only", only, "Comma-separated benchmark names");
  bench->add_option("--reps", reps, "Timed repetitions per case (at least 20)")->capture_default_str();
  bench->add_option("--out", output, "CSV report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (validate->parsed()) {
      auto x = load_instance(input);
      auto report = x->validate();
      if (!report.ok()) {
        out << report.to_string();
        return 1;
      }
      if (!ctx.quiet) out << "ok\n";
    } else if (info->parsed()) {
      print_info(ctx, *load_instance(input));
    } else if (migrate->parsed()) {
      auto m = io::schema_morphism_from_json(io::read_json_file(morphism), fs::path(morphism).parent_path());
      auto x = load_instance(input);
      // Keep the input's indexes on columns the source schema also has.
      IndexSpec index;
      for (const auto& name : x->index_spec().indexed) {
        if (m.source->find_generator(name)) index.indexed.push_back(name);
      }
      for (const auto& name : x->index_spec().unique_indexed) {
        if (m.source->find_generator(name)) index.unique_indexed.push_back(name);
      }
      emit(ctx, output, io::write_instance(delta_migrate(m, *x, std::move(index))));
    } else if (map_attrs->parsed()) {
      auto x = load_instance(input);
      std::map<std::string, AttrFunction> gammas;
      Typing typing;
      for (const auto& e : exprs) add_expression(*x, e, gammas, typing);
      emit(ctx, output, io::write_instance(map_attributes(gammas, typing, *x)));
    } else if (filter->parsed()) {
      auto x = load_instance(input);
      std::map<std::string, AttrPredicate> predicates;
      for (const auto& p : preds) add_predicate(*x, p, predicates);
      emit(ctx, output, io::write_instance(filter_by_attributes(predicates, *x)));
    } else if (colimit->parsed() || limit->parsed()) {
      const bool co = colimit->parsed();
      if (shape == "pushout" || shape == "pullback") {
        if (files.size() != 5) throw UsageError(shape + " takes five files: a f b g c");
        auto a = load_instance(files[0]);
        auto b = load_instance(files[2]);
        auto c = load_instance(files[4]);
        if (co) {
          auto f = load_morphism(files[1], a, b);
          auto g = load_morphism(files[3], a, c);
          emit(ctx, output, io::write_instance(*acset_pushout(f, g).apex));
        } else {
          auto f = load_morphism(files[1], b, a);
          auto g = load_morphism(files[3], c, a);
          emit(ctx, output, io::write_instance(*acset_pullback(f, g).apex));
        }
      } else {
        std::vector<InstancePtr> xs;
        for (const auto& path : files) xs.push_back(load_instance(path));
        const auto& apex = co ? acset_coproduct(xs).apex : acset_product(xs).apex;
        emit(ctx, output, io::write_instance(*apex));
      }
    } else if (compose->parsed()) {
      auto a = io::cospan_from_json(io::read_json_file(files[0]), fs::path(files[0]).parent_path());
      auto b = io::cospan_from_json(io::read_json_file(files[1]), fs::path(files[1]).parent_path());
      emit(ctx, output, io::dump(io::to_json(compose_cospans(a, b))));
    } else if (bench->parsed()) {
      bench::BenchOptions options;
      options.suite = suite;
      options.sizes = parse_sizes(sizes);
      options.seed = ctx.seed;
      options.reps = reps;
      options.only = split_commas(only);
      if (!ctx.quiet) {
        options.on_row = [&ctx](const bench::BenchRow& r) {
          ctx.err << r.category << " " << r.benchmark << " " << r.size << ": ratio " << r.ratio << "\n";
        };
      }
      auto report = bench::run_benchmarks(options);
      if (!output.empty()) io::write_text_file(output, report.csv());
      if (!ctx.quiet || output.empty()) out << report.table();
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::BadParameter && bench->parsed() ? 2 : 1;
  }
  return 0;
}

}  // namespace acsets::cli
