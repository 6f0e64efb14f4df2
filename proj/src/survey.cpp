#include "crosswalk/survey.hpp"

#include <stdexcept>

namespace crosswalk {

ActionDistribution baseline_distribution(const SurveyCounts& counts) {
    const double values[5] = {counts.stop, counts.wait, counts.cross,
                              counts.dont_notice, counts.get_in};
    double total = 0.0;
    for (double v : values) {
        if (v < 0.0)
            throw std::invalid_argument("baseline_distribution: negative survey count");
        total += v;
    }
    if (total <= 0.0)
        throw std::invalid_argument("baseline_distribution: empty survey");

    ActionDistribution d;
    d.stop = counts.stop / total;
    d.wait = counts.wait / total;
    d.cross = counts.cross / total;
    d.dont_notice = counts.dont_notice / total;
    d.get_in = counts.get_in / total;
    return d;
}

double trust_level(double score, double max_score) {
    if (max_score <= 0.0)
        throw std::invalid_argument("trust_level: max_score must be positive");
    if (score < 0.0 || score > max_score)
        throw std::invalid_argument("trust_level: score outside [0, max_score]");
    return score / max_score;
}

ReweightResult reweight(const ActionDistribution& base, double trust) {
    if (trust < 0.0 || trust > 1.0)
        throw std::invalid_argument("reweight: trust outside [0,1]");

    ReweightResult out;
    double get_in = base.get_in * (1.0 + trust);
    double dont_notice = base.dont_notice * (1.0 + trust);
    double risky = get_in + dont_notice;

    if (risky >= 1.0) {
        // Degenerate survey: the boosted risky mass swallows everything.
        out.clamped = true;
        out.distribution.get_in = get_in / risky;
        out.distribution.dont_notice = dont_notice / risky;
        return out;
    }

    double careful = (1.0 - risky) / 3.0;
    out.distribution.get_in = get_in;
    out.distribution.dont_notice = dont_notice;
    out.distribution.wait = careful;
    out.distribution.stop = careful;
    out.distribution.cross = careful;
    return out;
}

} // namespace crosswalk
