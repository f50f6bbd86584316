#pragma once

// Two-generator presentations of SL_n(Z) and friends: exact integer and
// modular matrix arithmetic, freely reduced words, transvection word tables,
// relator assembly, verification sweeps, and exporters.

#include "slnpres/matrix.hpp"
#include "slnpres/word.hpp"
#include "slnpres/transvections.hpp"
#include "slnpres/presentation.hpp"
#include "slnpres/verify.hpp"
#include "slnpres/export.hpp"
