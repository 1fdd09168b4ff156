#pragma once

#include "fpsl/term.hpp"
#include "fpsl/bigraph.hpp"
#include "fpsl/rewrite.hpp"
#include "fpsl/order.hpp"
#include "fpsl/variety.hpp"
#include "fpsl/model.hpp"
#include "fpsl/io.hpp"
