#pragma once

#include <stdexcept>
#include <string>

namespace ditopo {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define DITOPO_ERROR(Name)          \
  struct Name : Error {             \
    using Error::Error;             \
  }

DITOPO_ERROR(DimensionError);
DITOPO_ERROR(DomainError);
DITOPO_ERROR(ParseError);
DITOPO_ERROR(GridError);
DITOPO_ERROR(MarkingError);
DITOPO_ERROR(UnknownNameError);
DITOPO_ERROR(UnknownVertexError);
DITOPO_ERROR(NeedsBoundError);
DITOPO_ERROR(EndpointError);
DITOPO_ERROR(NotAFunctorError);
DITOPO_ERROR(ContextError);
DITOPO_ERROR(InclusionError);
DITOPO_ERROR(InconsistentPiecewiseError);
DITOPO_ERROR(UnsupportedError);

#undef DITOPO_ERROR

}  // namespace ditopo
