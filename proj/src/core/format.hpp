#ifndef SPINPAIR_FORMAT_HPP
#define SPINPAIR_FORMAT_HPP

#include <charconv>
#include <string>
#include <system_error>

namespace spinpair {

// 17 significant digits: enough to round-trip any double, locale independent
// ('.' decimal point always), trailing zeros trimmed by the general format.
inline std::string fmt17(double v) {
    char buf[64];
    const std::to_chars_result r =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

// Strict full-string parse; accepts inf/-inf/nan spellings.
inline bool parse_double(const std::string &text, double &out) {
    if (text.empty())
        return false;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    if (*first == '+') // from_chars does not eat a leading plus
        ++first;
    const std::from_chars_result r = std::from_chars(first, last, out);
    return r.ec == std::errc() && r.ptr == last;
}

} // namespace spinpair

#endif
