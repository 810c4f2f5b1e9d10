#include "pepys/enumeration.hpp"

#include "pepys/errors.hpp"

namespace pepys {

void DiceSpace::validate() const {
    if (num_dice < 1) throw DomainError("dice space needs at least one die");
    if (faces < 2) throw DomainError("dice need at least two faces");
    if (success_faces < 1 || success_faces > faces)
        throw DomainError("success faces must lie in 1.." + std::to_string(faces));
}

Probability DiceSpace::success_probability() const {
    return Probability(ExactRational(BigInt(success_faces), BigInt(faces)));
}

BigInt DiceSpace::outcome_count() const {
    return boost::multiprecision::pow(BigInt(faces), num_dice);
}

std::vector<std::uint64_t> enumerate_success_counts(DiceSpace const& space, std::uint64_t cap) {
    space.validate();
    BigInt const total = space.outcome_count();
    if (total > cap) throw EnumerationCapExceeded(total.str(), cap);

    // Odometer over face indices; faces [0, success_faces) are successes.
    std::vector<unsigned> dice(space.num_dice, 0);
    std::vector<std::uint64_t> histogram(space.num_dice + 1, 0);
    unsigned successes = space.num_dice;  // all dice start on face 0
    auto const count = total.convert_to<std::uint64_t>();
    for (std::uint64_t visited = 0; visited < count; ++visited) {
        ++histogram[successes];
        for (unsigned i = 0; i < space.num_dice; ++i) {
            unsigned& face = dice[i];
            bool const was_success = face < space.success_faces;
            face = (face + 1 == space.faces) ? 0 : face + 1;
            bool const is_success = face < space.success_faces;
            if (was_success && !is_success) --successes;
            if (!was_success && is_success) ++successes;
            if (face != 0) break;
        }
    }
    return histogram;
}

Probability brute_force_tail(DiceSpace const& space, unsigned threshold, std::uint64_t cap) {
    auto const histogram = enumerate_success_counts(space, cap);
    std::uint64_t favourable = 0;
    for (std::size_t k = threshold; k < histogram.size(); ++k) favourable += histogram[k];
    return Probability(ExactRational(BigInt(favourable), space.outcome_count()));
}

}  // namespace pepys
