#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sesqui/graph.hpp"
#include "sesqui/window.hpp"

namespace sesqui {

inline constexpr int kNoState = -1;
using Transitions = std::array<int, 6>;

// Every state is initial and final; transitions are partial.
struct PartialAutomaton {
  std::vector<std::string> labels;
  std::vector<Transitions> delta;

  std::size_t size() const { return delta.size(); }
  int letters_at(std::size_t s) const;
  // Some state reads the whole word.
  bool accepts(std::span<const Digit> w) const;
};

// Single initial state, every state final, partial transitions; the
// missing transitions lead to an implicit rejecting sink.
struct Dfa {
  std::vector<Transitions> delta;
  int initial = 0;

  std::size_t size() const { return delta.size(); }
  int run(std::span<const Digit> w, int from) const;
  bool accepts(std::span<const Digit> w) const { return run(w, initial) != kNoState; }
};

// Drops unreachable states and merges language-equivalent ones.
Dfa minimize(const Dfa& d);

// Classes of states with equal languages; class ids follow first occurrence.
std::vector<int> language_partition(std::span<const Transitions> delta);
std::vector<int> language_partition(const PartialAutomaton& a);

// Subset construction from the set of all states, then minimization.
Dfa determinize_minimize(const PartialAutomaton& a);

struct KernelReport {
  std::vector<int> states;  // states of D lying on a cycle
  int eta = 0;
  int theta = 0;
  bool absorbing = true;  // no transition leaves the kernel
  // Lasso reaching a cycle outside the kernel; empty when eta exists.
  std::vector<Digit> witness;
};

KernelReport kernel(const Dfa& d);
// The kernel as an automaton in its own right (all states initial).
PartialAutomaton kernel_automaton(const Dfa& d, const KernelReport& k);

// Bijection between states preserving every labeled transition both ways.
std::optional<std::vector<int>> automaton_iso(const PartialAutomaton& a, const PartialAutomaton& b);

// A_n: states are the rows of G_n; reading the leftmost digit of a successor
// moves to it. Throws if two successors share a leftmost digit.
PartialAutomaton build_A(int n, const EnumerationLimits& limits = {});
PartialAutomaton automaton_from_graph(const Digraph& g);
// Quotient by fold pairs (states with the same successors).
PartialAutomaton fold_A(const PartialAutomaton& a);

enum class KernelMatch { Full, Folded, Both, Neither };
std::string_view to_string(KernelMatch m);

struct AutomatonSummary {
  int n = 0;
  std::size_t a_states = 0;
  std::size_t a_classes = 0;
  std::size_t folded_states = 0;
  std::size_t folded_classes = 0;
  std::size_t dfa_states = 0;
  std::size_t kernel_states = 0;
  KernelMatch kernel_match = KernelMatch::Neither;
  int eta = 0;
  int theta = 0;
};
AutomatonSummary summarize_automata(int n, const EnumerationLimits& limits = {});

std::string to_dot(const PartialAutomaton& a, std::string_view name);
std::string to_dot(const Dfa& d, std::string_view name);

}  // namespace sesqui
