#ifndef QTI_IO_HPP
#define QTI_IO_HPP

#include <string>
#include <vector>

namespace qti {

inline constexpr const char* kVersion = "0.1.0";

// One header line, then rows formatted with %.17g so reruns are bit-identical
// and values round-trip exactly.
void write_csv(const std::string& path, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);

void write_text(const std::string& path, const std::string& content);

std::string read_text(const std::string& path);

// True when every numeric field of a CSV written by write_csv is finite.
bool csv_all_finite(const std::string& path);

std::string format_double(double v);

}  // namespace qti

#endif
