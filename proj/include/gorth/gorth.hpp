#pragma once

#include "gorth/classifier.hpp"
#include "gorth/errors.hpp"
#include "gorth/forms.hpp"
#include "gorth/invariants.hpp"
#include "gorth/labels.hpp"
#include "gorth/matrix.hpp"
#include "gorth/normal_forms.hpp"
#include "gorth/rational.hpp"
#include "gorth/structures.hpp"
