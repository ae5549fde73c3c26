#include "weyltasep/errors.hpp"
