#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bmlab/cli/certificate.hpp"
#include "bmlab/cli/config.hpp"
#include "bmlab/mpnum/bigfloat.hpp"

namespace bmlab::cli::detail {

using Item = std::function<std::vector<Certificate>()>;

struct ItemList {
  std::vector<std::string> names;
  std::vector<Item> items;

  void add(std::string name, Item fn) {
    names.push_back(std::move(name));
    items.push_back(std::move(fn));
  }
  /// Single-certificate convenience.
  void add1(std::string name, std::function<Certificate()> fn) {
    add(std::move(name), [fn = std::move(fn)] { return std::vector<Certificate>{fn()}; });
  }
};

// exact suites
ItemList table1_items(const SuiteConfig& cfg);
ItemList bmw_items(const SuiteConfig& cfg);
ItemList recurrence_items(const SuiteConfig& cfg);
ItemList reflection_items(const SuiteConfig& cfg);

// moment suites
ItemList conjecture_items(const SuiteConfig& cfg);
ItemList vanhove_ode_items(const SuiteConfig& cfg);
ItemList exceptional_items(const SuiteConfig& cfg);
ItemList lvalue_items(const SuiteConfig& cfg);
ItemList determinant_items(const SuiteConfig& cfg);
ItemList crandall_items(const SuiteConfig& cfg);
ItemList asymptotic_items(const SuiteConfig& cfg);
ItemList pslq_items(const SuiteConfig& cfg);

// modular suites
ItemList modular_param_items(const SuiteConfig& cfg);
ItemList basechange_items(const SuiteConfig& cfg);
ItemList kluyver_items(const SuiteConfig& cfg);

/// IKM(a,b;m) memoized per (a, b, m, bits); shared by the moment suites.
mpnum::BigFloat moment(int a, int b, int m, mpnum::Precision p);
mpnum::BigFloat honorary_moment(mpnum::Precision p);

}  // namespace bmlab::cli::detail
