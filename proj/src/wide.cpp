#include "korselt/wide.hpp"

namespace korselt {

std::string to_string(Wide v) {
  if (v == 0) return "0";
  unsigned __int128 mag =
      v < 0 ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  char buf[48];
  int pos = 48;
  while (mag > 0) {
    buf[--pos] = static_cast<char>('0' + static_cast<int>(mag % 10));
    mag /= 10;
  }
  std::string out;
  if (v < 0) out.push_back('-');
  out.append(buf + pos, buf + 48);
  return out;
}

}  // namespace korselt
