// Copyright 2026 The Medex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "medex/clock_value.hpp"

#include <cctype>

namespace medex {

namespace {

constexpr std::size_t kMaxDigits = 12;

bool all_digits(std::string_view s)
{
    if (s.empty() || s.size() > kMaxDigits)
        return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    }
    return true;
}

std::int64_t to_int(std::string_view s)
{
    std::int64_t v = 0;
    for (char c : s)
        v = v * 10 + (c - '0');
    return v;
}

// Decimal number `I[.F]` scaled by `unitMs`, truncated to whole milliseconds.
std::optional<std::int64_t> scaled_decimal(std::string_view number, std::int64_t unitMs)
{
    auto dot = number.find('.');
    std::string_view whole = number.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : number.substr(dot + 1);
    if (!all_digits(whole))
        return std::nullopt;
    if (dot != std::string_view::npos && !all_digits(frac))
        return std::nullopt;

    std::int64_t ms = to_int(whole) * unitMs;
    if (!frac.empty()) {
        // frac * unitMs / 10^len, truncated; keep at most 9 fractional digits.
        if (frac.size() > 9)
            frac = frac.substr(0, 9);
        std::int64_t denom = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            denom *= 10;
        ms += to_int(frac) * unitMs / denom;
    }
    return ms;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool ends_with(std::string_view s, std::string_view suffix)
{
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

} // namespace

std::optional<std::int64_t> parse_source_clock(std::string_view text)
{
    if (ends_with(text, "ms")) {
        auto number = text.substr(0, text.size() - 2);
        if (!all_digits(number))
            return std::nullopt;
        return to_int(number);
    }
    if (ends_with(text, "s"))
        return scaled_decimal(text.substr(0, text.size() - 1), 1000);
    return std::nullopt;
}

std::optional<std::int64_t> parse_smil_clock(std::string_view text)
{
    text = trim(text);
    if (text.empty())
        return std::nullopt;

    if (text.find(':') != std::string_view::npos) {
        std::string_view parts[3];
        int count = 0;
        std::string_view rest = text;
        while (true) {
            if (count == 3)
                return std::nullopt;
            auto colon = rest.find(':');
            parts[count++] = rest.substr(0, colon);
            if (colon == std::string_view::npos)
                break;
            rest = rest.substr(colon + 1);
        }
        if (count < 2)
            return std::nullopt;
        std::int64_t hours = 0;
        int idx = 0;
        if (count == 3) {
            if (!all_digits(parts[0]))
                return std::nullopt;
            hours = to_int(parts[0]);
            idx = 1;
        }
        std::string_view minutes = parts[idx];
        std::string_view seconds = parts[idx + 1];
        if (minutes.size() != 2 || !all_digits(minutes))
            return std::nullopt;
        if (seconds.size() < 2 || !std::isdigit(static_cast<unsigned char>(seconds[0]))
            || !std::isdigit(static_cast<unsigned char>(seconds[1])))
            return std::nullopt;
        auto secMs = scaled_decimal(seconds, 1000);
        if (!secMs)
            return std::nullopt;
        std::int64_t m = to_int(minutes);
        if (m > 59 || *secMs >= 60000)
            return std::nullopt;
        return hours * 3600000 + m * 60000 + *secMs;
    }

    struct Metric {
        std::string_view suffix;
        std::int64_t unitMs;
    };
    // "ms" and "min" must be tested before "s".
    static constexpr Metric metrics[] = {{"ms", 1}, {"min", 60000}, {"h", 3600000}, {"s", 1000}};
    for (const auto& m : metrics) {
        if (ends_with(text, m.suffix))
            return scaled_decimal(text.substr(0, text.size() - m.suffix.size()), m.unitMs);
    }
    return scaled_decimal(text, 1000);
}

std::string format_ms(std::int64_t ms)
{
    return std::to_string(ms) + "ms";
}

} // namespace medex
