#ifndef HSURF_IO_HPP
#define HSURF_IO_HPP

#include <iosfwd>
#include <string>

#include "hsurf/geom.hpp"
#include "hsurf/ratmap.hpp"

namespace hsurf {

// Hypersurface fixture: a field line (`Q` or `F<p>`), a chart line
// (`affine <nvars>` or `projective <nvars>`, or `ambient affine <nvars>` for
// the whole space), then the defining polynomial. '#' lines and blank lines
// are skipped.
Hypersurface read_hypersurface(std::istream& in);
Hypersurface read_hypersurface_file(const std::string& path);
void write_hypersurface(std::ostream& os, const Hypersurface& X);

// Map fixture: a field line, a header
//   map <chart> <nvars> -> <chart> <ncoords> [source-blocks a,b,..] [target-blocks ..]
// then one coordinate function per line in the polynomial grammar, '/'
// allowed for quotients.
RationalMap read_map(std::istream& in);
RationalMap read_map_file(const std::string& path);
void write_map(std::ostream& os, const RationalMap& F);

// Point literals: comma-separated field elements for affine points,
// ':'-separated for projective ones.
Point parse_point(const std::string& text, FieldSpec field);

} // namespace hsurf

#endif
