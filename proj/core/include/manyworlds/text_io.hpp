#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace manyworlds::textio {

/// Shortest representation that round-trips a double exactly (%.17g).
std::string format_double(double v);

/// "re im" pair, both %.17g.
std::string format_complex(std::complex<double> v);

/// Strict full-token parse; throws ParseError on trailing garbage.
double parse_double(const std::string& token);
long parse_long(const std::string& token);

/// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokenize(const std::string& line);

/// Reads the next non-empty, non-comment ('#') line; throws ParseError at EOF.
std::string next_line(std::istream& in, const std::string& context);

/// Checks that tokens[0] == keyword; returns the remaining tokens.
std::vector<std::string> expect_keyword(const std::vector<std::string>& tokens,
                                        const std::string& keyword);

/// Validates a "<magic> <version>" header line.
void expect_header(std::istream& in, const std::string& magic, int version);

}  // namespace manyworlds::textio
