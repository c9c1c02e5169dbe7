#include "specht/engine.hpp"

#include <pthread.h>

#include <exception>
#include <memory>
#include <mutex>

#include "specht/linalg.hpp"

namespace specht {

namespace {

struct StackJob {
    const std::function<void()>* fn;
    std::exception_ptr err;
};

void* stack_entry(void* p) {
    auto* job = static_cast<StackJob*>(p);
    try {
        (*job->fn)();
    } catch (...) {
        job->err = std::current_exception();
    }
    return nullptr;
}

}  // namespace

void run_with_stack(const std::function<void()>& fn, size_t bytes) {
    pthread_attr_t attr;
    pthread_attr_init(&attr);
    pthread_attr_setstacksize(&attr, bytes);
    StackJob job{&fn, nullptr};
    pthread_t th;
    if (pthread_create(&th, &attr, stack_entry, &job) != 0) {
        pthread_attr_destroy(&attr);
        fn();
        return;
    }
    pthread_join(th, nullptr);
    pthread_attr_destroy(&attr);
    if (job.err) std::rethrow_exception(job.err);
}

namespace {

GarnirBelt compute_belt(QuantumChar e, int k1, int k2) {
    int kk = k1 + k2;
    Multipartition bm(std::vector<Partition>{{k1}, {k2}});
    Multicharge bk({0, e.reduce(-k2)}, e);
    Engine<RationalCtx> be(bm, e, bk, RationalCtx{}, false);

    std::vector<int> star_entries;
    for (int v = k2 + 1; v <= kk; ++v) star_entries.push_back(v);
    for (int v = 1; v <= k2; ++v) star_entries.push_back(v);
    Tableau star(bm, star_entries);
    auto iseq = star.residue_sequence(e, bk);
    auto comp = std_tableaux_with(bm, e, bk, &iseq, nullptr);

    std::vector<int> ids;
    for (const auto& t : comp) ids.push_back(be.id(t));
    std::map<std::pair<int, int>, SparseRow<mpq_class>> rows;  // (generator, output tableau)
    std::vector<Letter> gens;
    for (int s = 1; s <= kk; ++s) gens.push_back(static_cast<Letter>(-s));
    for (int r = 1; r < kk; ++r) gens.push_back(static_cast<Letter>(r));
    for (size_t col = 0; col < ids.size(); ++col)
        for (size_t g = 0; g < gens.size(); ++g)
            for (const auto& [u, c] : be.act(be.basis(ids[col]), gens[g]))
                rows[{static_cast<int>(g), u}].emplace_back(static_cast<int>(col), c);
    std::vector<SparseRow<mpq_class>> mat;
    for (auto& [k, r] : rows) mat.push_back(std::move(r));
    auto ns = nullspace(RationalCtx{}, mat, static_cast<int>(ids.size()));

    GarnirBelt gb;
    gb.k1 = k1;
    gb.k2 = k2;
    gb.nullity = static_cast<int>(ns.size());
    if (ns.size() != 1)
        throw std::runtime_error("Garnir belt (" + std::to_string(k1) + "," + std::to_string(k2) +
                                 ") has annihilator dimension " + std::to_string(ns.size()));
    int best_len = -1;
    for (size_t col = 0; col < ids.size(); ++col) {
        if (ns[0][col] == 0) continue;
        gb.tableaux.push_back(comp[col]);
        gb.words.push_back(be.word(ids[col]));
        gb.coeffs.push_back(ns[0][col].get_num());
        int len = static_cast<int>(gb.words.back().size());
        if (comp[col].entries == star_entries) gb.star = static_cast<int>(gb.words.size()) - 1;
        best_len = std::max(best_len, len);
    }
    if (gb.star < 0) throw std::runtime_error("Garnir belt: block-swapped tableau not in support");
    if (static_cast<int>(gb.words[gb.star].size()) != best_len)
        throw std::runtime_error("Garnir belt: block-swapped tableau is not the longest term");
    for (size_t s = 0; s < gb.words.size(); ++s)
        if (static_cast<int>(s) != gb.star && static_cast<int>(gb.words[s].size()) == best_len)
            throw std::runtime_error("Garnir belt: longest term is not unique");
    if (abs(gb.coeffs[gb.star]) != 1) throw std::runtime_error("Garnir belt: leading coefficient is not a unit");
    return gb;
}

}  // namespace

const GarnirBelt& garnir_belt(QuantumChar e, int k1, int k2) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::unique_ptr<GarnirBelt>> cache;
    auto key = std::make_tuple(e.e, k1, k2);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return *it->second;
    }
    auto gb = std::make_unique<GarnirBelt>(compute_belt(e, k1, k2));
    std::lock_guard<std::mutex> lock(mu);
    auto [it, fresh] = cache.emplace(key, std::move(gb));
    return *it->second;
}

}  // namespace specht
