#pragma once

#include "qrep/decompose.hpp"
#include "qrep/dsl.hpp"
#include "qrep/errors.hpp"
#include "qrep/hom.hpp"
#include "qrep/limits.hpp"
#include "qrep/matrix.hpp"
#include "qrep/polynomial.hpp"
#include "qrep/powers.hpp"
#include "qrep/quiver.hpp"
#include "qrep/rank.hpp"
#include "qrep/representation.hpp"
#include "qrep/ring.hpp"
#include "qrep/scalar.hpp"
#include "qrep/subspace.hpp"
