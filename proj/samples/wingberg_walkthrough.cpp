// Builds a Wingberg presentation in code, prints its Fox matrix and the
// ideal of relations, then checks the relation images.
//
//   sample_wingberg_walkthrough [q] [q']     (default 25 5, p = 5)

#include "defring/defring.hpp"

#include <cstdlib>
#include <iostream>

using namespace defring;

int main(int argc, char **argv)
{
    WingbergSpec spec;
    spec.p = 5;
    spec.prec = 4;
    spec.deg = 8;
    spec.diag = DiagChars{true, 0, 0, false, true};

    PlaceSpec w;
    w.name = "w";
    w.q = 5;
    w.distinguished = true;

    PlaceSpec v;
    v.name = "v1";
    v.q = argc > 1 ? std::atoll(argv[1]) : 25;
    v.q_prime = argc > 2 ? std::atoll(argv[2]) : 5;
    spec.places = {w, v};

    try {
        Presentation pres = build_wingberg(spec);
        std::cout << render_dsl(pres) << "\n";
        std::cout << to_text(restrict_to_xinf(fox_matrix(pres), pres.counts().n), pres) << "\n";

        RingPresentation rp = ring_presentation(pres);
        std::cout << to_text(rp) << "\n";

        RelationReport rep = check_relations(pres, rp);
        std::cout << to_text(rep, rp);
        return rep.ok ? 0 : 1;
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
