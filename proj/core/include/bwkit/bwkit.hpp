#pragma once

#include "bwkit/bitstring.hpp"
#include "bwkit/cantor.hpp"
#include "bwkit/certificates.hpp"
#include "bwkit/document.hpp"
#include "bwkit/dyadic.hpp"
#include "bwkit/error.hpp"
#include "bwkit/family.hpp"
#include "bwkit/instance.hpp"
#include "bwkit/rational.hpp"
#include "bwkit/reductions.hpp"
#include "bwkit/selector.hpp"
#include "bwkit/seqcode.hpp"
#include "bwkit/separation.hpp"
#include "bwkit/sequence.hpp"
#include "bwkit/solvers.hpp"
#include "bwkit/tree.hpp"
#include "bwkit/verify.hpp"
