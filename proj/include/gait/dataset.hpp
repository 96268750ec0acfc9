#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace gait {

/// The six occlusal test conditions. Closed set: parsing anything else fails.
enum class Condition { ONL, OSL, OBL, OC2_5, OC3, OC3P };

/// Recording sessions: baseline (M1) and follow-up (M2).
enum class Session { M1, M2 };

/// Walking phase tag carried by the input data; analysis keeps linear only.
enum class Phase { Linear, Turn };

inline constexpr std::array<Condition, 6> kAllConditions = {
    Condition::ONL, Condition::OSL, Condition::OBL,
    Condition::OC2_5, Condition::OC3, Condition::OC3P};

inline constexpr std::array<Session, 2> kAllSessions = {Session::M1, Session::M2};

const std::string& to_string(Condition c);
const std::string& to_string(Session s);
const std::string& to_string(Phase p);

std::optional<Condition> parse_condition(const std::string& text);
std::optional<Session> parse_session(const std::string& text);
std::optional<Phase> parse_phase(const std::string& text);

/// "ONL, OSL, OBL, OC2.5, OC3, OC3P" — for error messages.
std::string condition_label_list();
std::string session_label_list();
std::string phase_label_list();

/// Number of numeric gait features per observation.
inline constexpr std::size_t kFeatureCount = 9;

/// Canonical feature column order used by every matrix in the library.
inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "v", "c", "D", "A", "A_P", "A_L", "L", "CoP", "CAPA"};

enum FeatureIndex : std::size_t {
    kSpeed = 0,        // v, walking speed
    kCadence = 1,      // c
    kStepTime = 2,     // D
    kAsymTemporal = 3, // A
    kAsymSupport = 4,  // A_P
    kAsymLength = 5,   // A_L
    kStepLength = 6,   // L
    kCop = 7,          // CoP index
    kCapa = 8,         // CAPA index
};

/// One gait record: labels plus the nine-dimensional state vector.
struct GaitObservation {
    long long obs_id = 0;
    Session session = Session::M1;
    Condition condition = Condition::ONL;
    Phase phase = Phase::Linear;

    double v = 0.0;    // walking speed, m/s
    double c = 0.0;    // cadence, steps/min
    double D = 0.0;    // step time, s
    double A = 0.0;    // temporal asymmetry ratio
    double A_P = 0.0;  // single-support asymmetry
    double A_L = 0.0;  // step-length asymmetry
    double L = 0.0;    // step length, m
    double CoP = 0.0;  // center-of-pressure index
    double CAPA = 0.0; // plantar capacitive index

    double feature(std::size_t index) const;
    void set_feature(std::size_t index, double value);
};

/// Ordered collection of observations plus a provenance note (file name,
/// generator description, ...). Row order is meaningful and preserved.
struct GaitDataset {
    std::vector<GaitObservation> observations;
    std::string provenance;

    std::size_t size() const { return observations.size(); }
    bool empty() const { return observations.empty(); }
};

} // namespace gait
