#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace yangian {

/// Number of formal parameters in the registry. The registry is fixed at
/// compile time so that the monomial order is the same for every session.
inline constexpr std::size_t kParamCount = 10;

struct ParamId {
    std::uint8_t index = 0;
    friend constexpr auto operator<=>(ParamId, ParamId) = default;
};

namespace param {
inline constexpr ParamId hbar{0};
inline constexpr ParamId p{1};
inline constexpr ParamId t{2};
inline constexpr ParamId u{3};
inline constexpr ParamId v{4};
inline constexpr ParamId w{5};
inline constexpr ParamId lambda{6};
inline constexpr ParamId lambda1{7};
inline constexpr ParamId lambda2{8};
inline constexpr ParamId lambda3{9};
} // namespace param

std::string_view param_name(ParamId id);
std::optional<ParamId> find_param(std::string_view name);
const std::array<ParamId, kParamCount>& all_params();

} // namespace yangian
