// Copyright 2026 The mumeb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <ostream>

namespace mumeb {

/// A fourth root of unity i^t, kept as its exponent t mod 4.
class I4Phase {
   public:
    constexpr I4Phase() = default;
    constexpr explicit I4Phase(int t) : t_(static_cast<std::uint8_t>(((t % 4) + 4) % 4)) {
    }

    constexpr int exponent() const {
        return t_;
    }
    constexpr I4Phase conj() const {
        return I4Phase(4 - t_);
    }
    constexpr bool is_real() const {
        return (t_ & 1) == 0;
    }
    /// +1 or -1 for real phases.
    constexpr int sign() const {
        return t_ == 0 ? 1 : -1;
    }

    constexpr I4Phase &operator*=(I4Phase other) {
        t_ = static_cast<std::uint8_t>((t_ + other.t_) & 3);
        return *this;
    }
    friend constexpr I4Phase operator*(I4Phase a, I4Phase b) {
        return a *= b;
    }
    friend constexpr bool operator==(I4Phase a, I4Phase b) = default;

    friend std::ostream &operator<<(std::ostream &out, I4Phase p) {
        static constexpr const char *kNames[] = {"1", "i", "-1", "-i"};
        return out << kNames[p.t_];
    }

   private:
    std::uint8_t t_ = 0;
};

}  // namespace mumeb
