#include "sset/corpus.hpp"

#include "sset/io.hpp"
#include "sset/standard.hpp"

namespace sset {

const Presentation* Corpus::object(const std::string& name) const
{
    for (const Presentation& p : objects)
        if (p.name() == name) return &p;
    return nullptr;
}

std::string Corpus::digest() const
{
    std::string all;
    for (const Presentation& p : objects) all += serialize_sset(p);
    for (const SimplicialMap& f : maps) all += serialize_smap(f);
    return fnv1a_hex(all);
}

namespace {

std::uint64_t nondeg_size(const Presentation& p)
{
    return static_cast<std::uint64_t>(p.gen_count());
}

}  // namespace

Corpus generate_corpus(std::uint64_t seed, CorpusLimits limits, Budget budget)
{
    Corpus c;
    c.seed = seed;
    c.limits = limits;

    auto admit = [&](Presentation p) -> const Presentation* {
        if (p.dim() > limits.max_dim) return nullptr;
        if (nondeg_size(p) > static_cast<std::uint64_t>(limits.max_nondegenerate))
            return nullptr;
        c.objects.push_back(std::move(p));
        return &c.objects.back();
    };

    admit(empty_sset());
    Presentation pt = terminal_point();
    admit(pt);
    for (int n = 2; n <= 3; ++n) admit(discrete_set(n));
    for (int p = 1; p <= 3; ++p) {
        admit(standard_simplex(p));
        admit(standard_boundary(p));
        for (int k = 0; k <= p; ++k) admit(standard_horn(p, k));
    }
    // the 2-vertex circle (two edges glued along both endpoints)
    Presentation bd = interval_boundary();
    Presentation d1 = standard_simplex(1);
    SimplicialMap bd_incl = inclusion_by_names(bd, d1);
    Pushout circle = pushout(bd_incl, bd_incl);
    circle.object.rename("circle2");
    admit(circle.object);
    // quotient of the interval by its boundary
    Pushout fold = pushout(bd_incl, terminal_map(bd, pt));
    fold.object.rename("loop1");
    admit(fold.object);

    // products of small pieces, within the size limit
    std::vector<std::pair<std::string, std::string>> pairs = {
        {"Delta1", "Delta1"}, {"Delta1", "disc2"}, {"Delta2", "disc2"},
        {"circle2", "disc2"}, {"Delta1", "Delta2"}};
    std::vector<Product> products;
    for (auto& [a, b] : pairs) {
        const Presentation* pa = c.object(a);
        const Presentation* pb = c.object(b);
        if (pa == nullptr || pb == nullptr) continue;
        Product pr = product(*pa, *pb);
        pr.object.rename(a + "." + b);
        if (pr.object.dim() <= limits.max_dim &&
            nondeg_size(pr.object) <= static_cast<std::uint64_t>(limits.max_nondegenerate)) {
            c.objects.push_back(pr.object);
            products.push_back(std::move(pr));
        }
    }

    // maps: identities, collapses, inclusions, projections, quotient legs
    auto add_map = [&](SimplicialMap m) { c.maps.push_back(std::move(m)); };
    for (const char* nm : {"pt", "Delta1", "Delta2", "bdDelta1", "bdDelta2", "disc2",
                           "circle2"}) {
        const Presentation* p = c.object(nm);
        if (p != nullptr) {
            SimplicialMap id = identity_map(*p);
            id.rename(std::string("id_") + nm);
            add_map(std::move(id));
        }
    }
    for (const char* nm : {"Delta1", "Delta2", "bdDelta1", "disc2", "disc3", "circle2",
                           "loop1"}) {
        const Presentation* p = c.object(nm);
        if (p != nullptr) {
            SimplicialMap col = terminal_map(*p, pt);
            col.rename(std::string("collapse_") + nm);
            add_map(std::move(col));
        }
    }
    for (int p = 1; p <= std::min(limits.max_dim, 3); ++p) {
        SimplicialMap bi = inclusion_by_names(standard_boundary(p), standard_simplex(p));
        bi.rename("bd_incl_" + std::to_string(p));
        add_map(std::move(bi));
        for (int k = 0; k <= p; ++k) {
            SimplicialMap hi = inclusion_by_names(standard_horn(p, k), standard_simplex(p));
            hi.rename("horn_incl_" + std::to_string(p) + "_" + std::to_string(k));
            add_map(std::move(hi));
        }
    }
    for (Product& pr : products) {
        SimplicialMap pl = pr.proj_left();
        pl.rename("proj_" + pr.object.name());
        add_map(std::move(pl));
    }
    {
        // rebuild the quotient legs against the renamed targets
        SimplicialMap l("quot_Delta1_loop1", fold.from_left.source(), fold.object,
                        fold.from_left.images());
        add_map(std::move(l));
        SimplicialMap cl("leg_circle2", circle.from_left.source(), circle.object,
                         circle.from_left.images());
        add_map(std::move(cl));
        // vertex inclusions, the two-point fold, and the empty map
        SimplicialMap v0("vertex0_Delta1", pt, d1, {NormalSimplex{{}, d1.require("0")}});
        add_map(std::move(v0));
        SimplicialMap v1("vertex1_Delta1", pt, d1, {NormalSimplex{{}, d1.require("1")}});
        add_map(std::move(v1));
        Presentation two = coproduct({pt, pt}).object;
        two.rename("two_points");
        SimplicialMap fold2 = terminal_map(two, pt);
        fold2.rename("fold_two_points");
        SimplicialMap id2 = identity_map(two);
        id2.rename("id_two_points");
        c.objects.push_back(two);
        add_map(std::move(fold2));
        add_map(std::move(id2));
        SimplicialMap fe = map_from_empty(pt);
        fe.rename("from_empty_pt");
        add_map(std::move(fe));
    }

    // fibrations: verified members plus constructed ones
    c.fibration_check_dim = std::min(limits.max_dim + 1, 3);
    for (const SimplicialMap& m : c.maps) {
        Checked<LiftingSquare> cert = is_kan_fibration_up_to(m, c.fibration_check_dim, budget);
        if (cert.holds()) c.fibrations.push_back(m);
    }
    // truncated pair groupoid over the point, entered with a waiver
    Presentation e2 = pair_groupoid_nerve(2, std::max(1, std::min(limits.max_dim, 3)));
    if (nondeg_size(e2) <= static_cast<std::uint64_t>(limits.max_nondegenerate)) {
        SimplicialMap e2c = terminal_map(e2, pt);
        e2c.rename("collapse_" + e2.name());
        c.objects.push_back(e2);
        c.waived_fibrations.push_back({e2c, TruncationWaiver{true, e2.dim()}});
        c.maps.push_back(std::move(e2c));
    }

    // anodyne traces: horn fillings of small corpus objects (<= 3 stages,
    // cells of dimension <= 2)
    auto push_trace = [&](const Presentation& start, int stages, int dim) {
        Factorization f = factorize(terminal_map(start, pt), MapFamily::horns(dim),
                                    stages, dim, budget);
        if (f.trace.has_value()) {
            f.trace->name = "trace_" + start.name() + "_" + std::to_string(stages) + "_" +
                            std::to_string(dim);
            c.traces.push_back(std::move(*f.trace));
        }
    };
    push_trace(pt, 1, 1);
    push_trace(pt, 2, 1);
    if (const Presentation* p = c.object("bdDelta1")) push_trace(*p, 1, 1);
    if (limits.max_dim >= 2) {
        push_trace(pt, 1, 2);
        if (const Presentation* p = c.object("bdDelta2")) push_trace(*p, 1, 1);
    }
    return c;
}

}  // namespace sset
