// Parses a presentation from text and prints the ring as JSON.
// A lower unipotent generator forces the direct matrix route.

#include "defring/defring.hpp"

#include <iostream>

using namespace defring;

static const char *kText = R"(
p 7 prec 3 deg 5
chi1 omega^0 chi2 omega^1
gen g  block=Gamma chi=trivial pi=gamma
gen u  block=Xinf chi=chi1*chi2^-1 pinned
gen l  block=Xinf chi=chi2*chi1^-1
gen y  block=Xinf chi=chi1*chi2^-1
rel r = [l, g] * [y, u]
)";

int main()
{
    try {
        Presentation pres = parse_presentation(kText);
        RingPresentation rp = ring_presentation(pres);
        std::cout << to_json(rp).dump(2) << "\n";

        auto names = rp.var_names();
        auto images = universal_matrices(pres, rp.table);
        for (std::size_t i = 0; i < pres.gens.size(); ++i)
            std::cout << pres.gens[i].name << " -> " << images[i].to_string(names) << "\n";
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
