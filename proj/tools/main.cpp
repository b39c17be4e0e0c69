#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "wamex/automaton.hpp"
#include "wamex/errors.hpp"
#include "wamex/expression.hpp"
#include "wamex/kleene.hpp"
#include "wamex/munn.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wamex::ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string expression_text(const std::string& arg) {
  if (arg != "-") return arg;
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  return buf.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

wamex::WeightedExpression parse_expr_args(const std::string& semiring, const std::string& monoid,
                                          const std::string& expr) {
  if (semiring.empty() || monoid.empty()) {
    throw wamex::ParseError("--expr needs --semiring and --monoid");
  }
  return wamex::parse_expression(expression_text(expr), wamex::make_semiring(semiring),
                                 wamex::make_monoid(monoid));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted automata and expressions over pre-rational monoids"};
  app.require_subcommand(1);

  std::string semiring, monoid, expr, automaton_path, at, out_path, word, tree;
  std::size_t budget = wamex::kDefaultStateBudget;
  int arity = -1;

  std::function<void()> action;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression or automaton at a point");
  eval_cmd->add_option("--semiring", semiring, "semiring spec, e.g. qplus or lang:ab");
  eval_cmd->add_option("--monoid", monoid, "monoid spec, e.g. free:a,b or fim:l,r");
  eval_cmd->add_option("--expr", expr, "weighted expression ('-' reads stdin)");
  eval_cmd->add_option("--automaton", automaton_path, "automaton JSON file");
  eval_cmd->add_option("--at", at, "monoid element literal")->required();
  eval_cmd->add_option("--budget", budget, "prefix-state budget");
  eval_cmd->callback([&] {
    action = [&] {
      if (!automaton_path.empty()) {
        wamex::WeightedAutomaton a = wamex::automaton_from_json(read_file(automaton_path));
        wamex::Elem target = a.monoid->parse(at);
        std::cout << a.semiring->render(wamex::evaluate(a, target, budget)) << "\n";
      } else {
        wamex::WeightedExpression w = parse_expr_args(semiring, monoid, expr);
        wamex::Elem target = w.monoid->parse(at);
        std::cout << w.semiring->render(wamex::evaluate(w, target, budget)) << "\n";
      }
    };
  });

  auto* compile_cmd = app.add_subcommand("compile", "translate an expression to an automaton");
  compile_cmd->add_option("--semiring", semiring)->required();
  compile_cmd->add_option("--monoid", monoid)->required();
  compile_cmd->add_option("--expr", expr)->required();
  compile_cmd->add_option("--out", out_path, "output file (.json or .dot)")->required();
  compile_cmd->callback([&] {
    action = [&] {
      wamex::WeightedAutomaton a = wamex::to_automaton(parse_expr_args(semiring, monoid, expr));
      std::string text;
      if (ends_with(out_path, ".dot")) {
        text = wamex::automaton_to_dot(a);
      } else if (ends_with(out_path, ".json")) {
        text = wamex::automaton_to_json(a);
      } else {
        throw wamex::ParseError("--out must end in .json or .dot");
      }
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw wamex::ParseError("cannot write '" + out_path + "'");
      out << text;
    };
  });

  auto* decompile_cmd = app.add_subcommand("decompile", "translate an automaton to an expression");
  decompile_cmd->add_option("--automaton", automaton_path)->required();
  decompile_cmd->callback([&] {
    action = [&] {
      wamex::WeightedAutomaton a = wamex::automaton_from_json(read_file(automaton_path));
      std::cout << wamex::render_expression(wamex::to_expression(a)) << "\n";
    };
  });

  auto* amb_cmd = app.add_subcommand("ambiguity", "number of decompositions or runs at a point");
  amb_cmd->add_option("--semiring", semiring);
  amb_cmd->add_option("--monoid", monoid);
  amb_cmd->add_option("--expr", expr);
  amb_cmd->add_option("--automaton", automaton_path);
  amb_cmd->add_option("--at", at)->required();
  amb_cmd->add_option("--budget", budget);
  amb_cmd->callback([&] {
    action = [&] {
      auto counting = wamex::make_counting_semiring();
      if (!automaton_path.empty()) {
        wamex::WeightedAutomaton a = wamex::automaton_from_json(read_file(automaton_path));
        wamex::Elem target = a.monoid->parse(at);
        std::cout << counting->render(wamex::ambiguity(a, target, budget)) << "\n";
      } else {
        wamex::WeightedExpression w = parse_expr_args(semiring, monoid, expr);
        wamex::Elem target = w.monoid->parse(at);
        std::cout << counting->render(wamex::ambiguity(w, target, budget)) << "\n";
      }
    };
  });

  auto* munn_cmd = app.add_subcommand("munn", "render a Munn bi-rooted tree as DOT");
  munn_cmd->add_option("--word", word, "signed word over the free inverse monoid");
  munn_cmd->add_option("--tree", tree, "ranked tree literal, e.g. a(b,c(d,d))");
  munn_cmd->add_option("--arity", arity, "maximum arity for the tree encoding");
  munn_cmd->callback([&] {
    action = [&] {
      if (!word.empty() == !tree.empty()) {
        throw wamex::ParseError("munn needs exactly one of --word or --tree");
      }
      if (!word.empty()) {
        // generator alphabet in order of first appearance
        auto alphabet = std::make_shared<wamex::MunnAlphabet>();
        for (const std::string& token : wamex::signed_word_tokens(word)) {
          std::string name = token.front() == '~' ? token.substr(1) : token;
          if (name != "eps" && alphabet->index_of(name) < 0) alphabet->names.push_back(name);
        }
        std::cout << wamex::to_dot(wamex::munn_parse(alphabet, word));
      } else {
        wamex::RankedTree t = wamex::parse_ranked_tree(tree);
        int max_arity = arity;
        if (max_arity < 0) {
          // infer the maximum arity present
          std::function<int(const wamex::RankedTree&)> widest = [&](const wamex::RankedTree& n) {
            int m = static_cast<int>(n.children.size());
            for (const auto& c : n.children) m = std::max(m, widest(c));
            return m;
          };
          max_arity = std::max(1, widest(t));
        }
        std::cout << wamex::to_dot(wamex::encode_tree(t, max_arity));
      }
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    action();
  } catch (const wamex::NonTerminating& e) {
    std::cerr << "non-terminating: " << e.what() << "\n";
    return 2;
  } catch (const wamex::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
