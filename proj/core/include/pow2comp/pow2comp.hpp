#pragma once

#include "pow2comp/analytic.hpp"
#include "pow2comp/auto_source.hpp"
#include "pow2comp/convolution.hpp"
#include "pow2comp/errors.hpp"
#include "pow2comp/exact.hpp"
#include "pow2comp/halving_eval.hpp"
#include "pow2comp/index_spec.hpp"
#include "pow2comp/mod_table.hpp"
#include "pow2comp/natural.hpp"
#include "pow2comp/padic.hpp"
#include "pow2comp/published_tables.hpp"
#include "pow2comp/partition.hpp"
#include "pow2comp/residue.hpp"
#include "pow2comp/residue_source.hpp"
#include "pow2comp/sparse_eval.hpp"
#include "pow2comp/sparse_index.hpp"
#include "pow2comp/table_io.hpp"
#include "pow2comp/table_synth.hpp"
