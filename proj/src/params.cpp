#include "yangian/params.hpp"

namespace yangian {

namespace {

constexpr std::array<std::string_view, kParamCount> kNames = {
    "hbar", "p", "t", "u", "v", "w", "lambda", "lambda1", "lambda2", "lambda3"};

} // namespace

std::string_view param_name(ParamId id) { return kNames.at(id.index); }

std::optional<ParamId> find_param(std::string_view name)
{
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name)
            return ParamId{static_cast<std::uint8_t>(i)};
    }
    return std::nullopt;
}

const std::array<ParamId, kParamCount>& all_params()
{
    static const std::array<ParamId, kParamCount> ids = [] {
        std::array<ParamId, kParamCount> out{};
        for (std::size_t i = 0; i < kParamCount; ++i)
            out[i] = ParamId{static_cast<std::uint8_t>(i)};
        return out;
    }();
    return ids;
}

} // namespace yangian
