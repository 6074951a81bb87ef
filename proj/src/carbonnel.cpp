#include "ccker/polykernel.hpp"

#include <algorithm>
#include <set>

namespace ccker {

RccInstance kernelize_carbonnel(const RccInstance& inst)
{
    inst.validate();
    const int r = inst.relation->r();
    if (r < 3)
        throw PreconditionError("the product-pruning kernel needs arity r >= 3");
    std::vector<std::vector<Vertex>> original = inst.constraints;
    std::sort(original.begin(), original.end());
    original.erase(std::unique(original.begin(), original.end()), original.end());
    std::set<std::vector<Vertex>> current(original.begin(), original.end());

    // Removal only shrinks F', so a product that is full at the end was full
    // whenever one of its antipodal pairs was visited: one pass suffices.
    const auto ur = static_cast<std::size_t>(r);
    std::vector<Vertex> probe(ur);
    for (std::size_t a = 0; a < original.size(); ++a) {
        for (std::size_t b = a + 1; b < original.size(); ++b) {
            const auto& x = original[a];
            const auto& y = original[b];
            if (!current.count(x) || !current.count(y))
                continue;
            bool antipodal = true;
            for (std::size_t j = 0; j < ur && antipodal; ++j)
                antipodal = x[j] != y[j];
            if (!antipodal)
                continue;
            bool full = true;
            std::vector<Vertex> last(ur);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << ur) && full; ++mask) {
                for (std::size_t j = 0; j < ur; ++j)
                    probe[j] = (mask >> j) & 1U ? y[j] : x[j];
                full = current.count(probe) > 0;
            }
            if (!full)
                continue;
            for (std::size_t j = 0; j < ur; ++j)
                last[j] = std::max(x[j], y[j]);
            current.erase(last);
        }
    }
    return RccInstance{inst.graph, inst.relation, {current.begin(), current.end()}};
}

} // namespace ccker
