#pragma once

#include "qforms/exactnum.hpp"
#include "qforms/form_parse.hpp"
#include "qforms/forms.hpp"
#include "qforms/geometry.hpp"
#include "qforms/graphinv.hpp"
#include "qforms/hilbert.hpp"
#include "qforms/json_io.hpp"
#include "qforms/oracle.hpp"
#include "qforms/rational.hpp"
