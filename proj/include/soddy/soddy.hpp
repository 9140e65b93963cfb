#pragma once

#include "soddy/arbelos.hpp"
#include "soddy/descartes.hpp"
#include "soddy/geometry.hpp"
#include "soddy/json_io.hpp"
#include "soddy/laurent.hpp"
#include "soddy/scalar.hpp"
#include "soddy/svg.hpp"
