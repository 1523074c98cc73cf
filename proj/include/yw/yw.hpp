#pragma once

#include "field.hpp"
#include "matrix.hpp"
#include "linalg.hpp"
#include "permgrp.hpp"
#include "algebra.hpp"
#include "module.hpp"
#include "decompose.hpp"
#include "cartan.hpp"
#include "mackey.hpp"
#include "condense.hpp"
#include "morita.hpp"
#include "complex.hpp"
#include "derived.hpp"
#include "io.hpp"
