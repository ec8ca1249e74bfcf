#ifndef GUP_GUP_HPP
#define GUP_GUP_HPP

#include "gup/diffeq.hpp"
#include "gup/factorials.hpp"
#include "gup/inversion.hpp"
#include "gup/linfactor.hpp"
#include "gup/rational.hpp"
#include "gup/report.hpp"
#include "gup/suites.hpp"
#include "gup/ultraspherical.hpp"
#include "gup/unipoly.hpp"

#endif
