#include "gait/dataset.hpp"

#include <stdexcept>

namespace gait {

namespace {

const std::string kConditionNames[] = {"ONL", "OSL", "OBL", "OC2.5", "OC3", "OC3P"};
const std::string kSessionNames[] = {"M1", "M2"};
const std::string kPhaseNames[] = {"linear", "turn"};

template <typename Names>
std::string join(const Names& names, std::size_t n) {
    std::string out;
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ", ";
        out += names[i];
    }
    return out;
}

} // namespace

const std::string& to_string(Condition c) { return kConditionNames[static_cast<std::size_t>(c)]; }
const std::string& to_string(Session s) { return kSessionNames[static_cast<std::size_t>(s)]; }
const std::string& to_string(Phase p) { return kPhaseNames[static_cast<std::size_t>(p)]; }

std::optional<Condition> parse_condition(const std::string& text) {
    for (Condition c : kAllConditions) {
        if (text == to_string(c)) return c;
    }
    return std::nullopt;
}

std::optional<Session> parse_session(const std::string& text) {
    for (Session s : kAllSessions) {
        if (text == to_string(s)) return s;
    }
    return std::nullopt;
}

std::optional<Phase> parse_phase(const std::string& text) {
    if (text == kPhaseNames[0]) return Phase::Linear;
    if (text == kPhaseNames[1]) return Phase::Turn;
    return std::nullopt;
}

std::string condition_label_list() { return join(kConditionNames, 6); }
std::string session_label_list() { return join(kSessionNames, 2); }
std::string phase_label_list() { return join(kPhaseNames, 2); }

double GaitObservation::feature(std::size_t index) const {
    switch (index) {
    case kSpeed: return v;
    case kCadence: return c;
    case kStepTime: return D;
    case kAsymTemporal: return A;
    case kAsymSupport: return A_P;
    case kAsymLength: return A_L;
    case kStepLength: return L;
    case kCop: return CoP;
    case kCapa: return CAPA;
    default: throw std::out_of_range("feature index");
    }
}

void GaitObservation::set_feature(std::size_t index, double value) {
    switch (index) {
    case kSpeed: v = value; break;
    case kCadence: c = value; break;
    case kStepTime: D = value; break;
    case kAsymTemporal: A = value; break;
    case kAsymSupport: A_P = value; break;
    case kAsymLength: A_L = value; break;
    case kStepLength: L = value; break;
    case kCop: CoP = value; break;
    case kCapa: CAPA = value; break;
    default: throw std::out_of_range("feature index");
    }
}

} // namespace gait
