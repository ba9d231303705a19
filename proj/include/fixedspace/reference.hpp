#pragma once

#include <vector>

#include "fixedspace/ratfun.hpp"

namespace fixedspace {

/// The thirteen closed-form alpha(g, r) values for g <= 3 backing the
/// `table1` CLI subcommand and its --verify mode.
struct Table1Entry {
    int g;
    int r;
    RatFun value;
};

const std::vector<Table1Entry>& table1_reference();

}  // namespace fixedspace
