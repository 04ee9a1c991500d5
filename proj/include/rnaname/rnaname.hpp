#pragma once

// Everything in one include.

#include <rnaname/alignment.hpp>
#include <rnaname/batch.hpp>
#include <rnaname/bits.hpp>
#include <rnaname/clustering.hpp>
#include <rnaname/cmd5.hpp>
#include <rnaname/collisions.hpp>
#include <rnaname/error.hpp>
#include <rnaname/evaluation.hpp>
#include <rnaname/fasta.hpp>
#include <rnaname/leaf_order.hpp>
#include <rnaname/library.hpp>
#include <rnaname/matrix.hpp>
#include <rnaname/naming.hpp>
#include <rnaname/parallel.hpp>
#include <rnaname/sequence.hpp>
