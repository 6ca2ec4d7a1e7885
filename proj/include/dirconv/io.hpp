#pragma once

// Text formats. All files start with one space-separated key=value header
// line, then one record per line, sorted so that writing is deterministic:
//
//   function  (.fn)   monoid=nstar ring=Q bound=1024      then  <n> <value>
//   module    (.mfn)  ... rank=2                          then  <n> [v1,...,vm]
//   extension (.efn)  ... denominator=6                   then  <n> <value>   (core)
//   series    (.ser)  ring=Q caps=4,3,2                   then  a1,...,ak <value>
//   laurent   (.lser) ring=Q caps=6,6 shift=-3,-3         then  a1,...,ak <value> (body)
//
// Only nonzero values are written. Polynomial vector components are
// separated by ';' inside brackets because the literals themselves
// contain commas.

#include <iosfwd>
#include <string>

#include "dirconv/powerseries.hpp"

namespace dirconv {

ArithFunction read_fn(std::istream& in);
void write_fn(std::ostream& out, const ArithFunction& f);

ModuleFunction read_mfn(std::istream& in);
void write_mfn(std::ostream& out, const ModuleFunction& f);

ExtFunction read_efn(std::istream& in);
void write_efn(std::ostream& out, const ExtFunction& f);

TruncatedSeries read_series(std::istream& in);
void write_series(std::ostream& out, const TruncatedSeries& s);

LaurentSeries read_laurent(std::istream& in);
void write_laurent(std::ostream& out, const LaurentSeries& s);

// Path variants; errors are prefixed with the file name.
ArithFunction load_fn(const std::string& path);
ModuleFunction load_mfn(const std::string& path);
ExtFunction load_efn(const std::string& path);
TruncatedSeries load_series(const std::string& path);
LaurentSeries load_laurent(const std::string& path);

std::string format_fn(const ArithFunction& f);
std::string format_mfn(const ModuleFunction& f);
std::string format_efn(const ExtFunction& f);
std::string format_series(const TruncatedSeries& s);
std::string format_laurent(const LaurentSeries& s);

void save_text(const std::string& path, const std::string& content);

}  // namespace dirconv
