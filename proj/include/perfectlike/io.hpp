#ifndef PERFECTLIKE_IO_HPP
#define PERFECTLIKE_IO_HPP

#include <iosfwd>
#include <string>

#include "perfectlike/code.hpp"

namespace perfectlike {

// Text format (bit-exact): header lines "q <int>" and "n <int>", then one
// word per line as space-separated symbols; '#' lines are comments;
// multiplicity via repeated lines. Partitions add "class <label>" separators.

Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& c);
void write_code_file(const std::string& path, const Code& c);

Partition read_partition(std::istream& in);
Partition read_partition_file(const std::string& path);
void write_partition(std::ostream& out, const Partition& p);
void write_partition_file(const std::string& path, const Partition& p);

} // namespace perfectlike

#endif
