#pragma once

#include "glcat/scalar.hpp"
#include "glcat/laurent.hpp"
#include "glcat/permutation.hpp"
#include "glcat/sequence.hpp"
#include "glcat/diagram.hpp"
#include "glcat/rewrite.hpp"
#include "glcat/linalg.hpp"
#include "glcat/polrep.hpp"
#include "glcat/dg.hpp"
#include "glcat/k0.hpp"
#include "glcat/expression.hpp"
#include "glcat/serialize.hpp"
#include "glcat/verify.hpp"
