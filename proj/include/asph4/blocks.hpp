#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asph4/curves.hpp"
#include "asph4/lantern.hpp"
#include "asph4/sl2.hpp"

namespace asph4::blocks {

using sl2z::MonodromyClass;
using sl2z::Sl2Matrix;

struct IllegalGluing : std::runtime_error {
    explicit IllegalGluing(const std::string& what) : std::runtime_error(what) {}
};
struct SlotInUse : std::runtime_error {
    explicit SlotInUse(const std::string& what) : std::runtime_error(what) {}
};
struct UnknownSlot : std::runtime_error {
    explicit UnknownSlot(const std::string& what) : std::runtime_error(what) {}
};

/// Type of a gluable boundary component: a fiber bundle over the circle.
/// Genus-1 boundaries carry an exact monodromy class; higher genus carries a
/// nominal twist descriptor compared verbatim. The orientation sign is taken
/// relative to the block's own orientation; -1 marks a boundary whose induced
/// orientation is reversed relative to the recorded monodromy.
struct BoundaryLabel {
    int fiber_genus;
    std::optional<MonodromyClass> monodromy;  // genus 1 only
    std::string descriptor;                   // genus >= 2 only
    int orientation = +1;

    static BoundaryLabel torus(MonodromyClass c, int orientation = +1) {
        return {1, std::move(c), "", orientation};
    }
    static BoundaryLabel surface(int genus, std::string descriptor, int orientation = +1) {
        if (genus < 2) throw std::invalid_argument("BoundaryLabel: surface genus must be >= 2");
        return {genus, std::nullopt, std::move(descriptor), orientation};
    }

    /// Monodromy class with the label's own orientation sign folded in.
    MonodromyClass effective_class(int instance_sign = +1) const {
        if (fiber_genus != 1) throw std::logic_error("effective_class: genus-1 labels only");
        return orientation * instance_sign > 0 ? *monodromy : sl2z::inverse_class(*monodromy);
    }

    /// Label as seen from an instance with the given orientation sign.
    BoundaryLabel oriented(int instance_sign) const {
        BoundaryLabel out = *this;
        out.orientation *= instance_sign;
        return out;
    }

    /// Reverse of the label: monodromy inverted for torus boundaries, the
    /// orientation mark flipped for symbolic ones.
    BoundaryLabel reversed() const {
        BoundaryLabel out = *this;
        if (fiber_genus == 1)
            out.monodromy = sl2z::inverse_class(*monodromy);
        else
            out.orientation = -out.orientation;
        return out;
    }

    bool operator==(const BoundaryLabel& o) const {
        return fiber_genus == o.fiber_genus && monodromy == o.monodromy &&
               descriptor == o.descriptor && orientation == o.orientation;
    }
    bool operator!=(const BoundaryLabel& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        if (fiber_genus == 1)
            os << "T2(" << monodromy->to_string() << ")";
        else
            os << "F" << fiber_genus << "(" << descriptor << ")";
        if (orientation < 0) os << "^rev";
        return os.str();
    }
};

/// Two boundary labels can be identified exactly when the gluing admits an
/// orientation-reversing matching: equal fiber genus, and the monodromy of
/// one side is conjugate to the inverse of the other (genus 1), or the same
/// descriptor with opposite orientation marks (genus >= 2).
inline bool labels_glueable(const BoundaryLabel& l1, const BoundaryLabel& l2) {
    if (l1.fiber_genus != l2.fiber_genus) return false;
    if (l1.fiber_genus == 1)
        return l2.effective_class() == sl2z::inverse_class(l1.effective_class());
    return l1.descriptor == l2.descriptor && l1.orientation == -l2.orientation;
}

enum class BlockKind {
    Core,
    Splitter,
    Connector,
    Cap,
    SixCap,
    TwistCobordism,
    GenusThreeBundle,
    TorusDiskBundle,
};

inline std::string kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::Core: return "core";
        case BlockKind::Splitter: return "splitter";
        case BlockKind::Connector: return "connector";
        case BlockKind::Cap: return "cap";
        case BlockKind::SixCap: return "six_cap";
        case BlockKind::TwistCobordism: return "twist_cobordism";
        case BlockKind::GenusThreeBundle: return "genus_three_bundle";
        case BlockKind::TorusDiskBundle: return "torus_disk_bundle";
    }
    throw std::logic_error("kind_name: bad kind");
}

/// A building block: an aspherical 4-manifold with bundle boundaries, known
/// Euler characteristic, and (where stated) a claimed signature. Asphericity
/// and pi1-injectivity are recorded attributes, never computed.
struct Block {
    BlockKind kind = BlockKind::Core;
    long long chi = 0;
    std::optional<long long> sigma_claimed;
    std::string sigma_provenance;
    std::vector<BoundaryLabel> boundaries;
    bool aspherical_certified = true;
    bool pi1_injective_certified = true;

    // constructor parameters, for serialization
    std::optional<Sl2Matrix> psi;        // Connector
    int genus_param = 0;                 // TwistCobordism
    std::vector<Sl2Matrix> punctures;    // TorusDiskBundle

    bool operator==(const Block& o) const {
        return kind == o.kind && chi == o.chi && sigma_claimed == o.sigma_claimed &&
               boundaries == o.boundaries && psi == o.psi && genus_param == o.genus_param &&
               punctures == o.punctures;
    }
    bool operator!=(const Block& o) const { return !(*this == o); }
};

namespace detail {

inline Block make_block(BlockKind kind, long long chi, std::optional<long long> sigma,
                        std::string provenance, std::vector<BoundaryLabel> boundaries) {
    Block b;
    b.kind = kind;
    b.chi = chi;
    b.sigma_claimed = sigma;
    b.sigma_provenance = std::move(provenance);
    b.boundaries = std::move(boundaries);
    return b;
}

}  // namespace detail

/// Core block: chi = 1, signature claimed +1, one torus boundary carrying the
/// quarter-turn monodromy.
inline Block core() {
    return detail::make_block(BlockKind::Core, 1, +1, "claimed",
                              {BoundaryLabel::torus(sl2z::classify(sl2z::phi()))});
}

/// Splitter: chi = 0, boundaries T2(phi^-1) and three single-twist tori.
inline Block splitter() {
    const auto tau = sl2z::classify(sl2z::twist_a());
    return detail::make_block(
        BlockKind::Splitter, 0, +1, "claimed",
        {BoundaryLabel::torus(sl2z::classify(sl2z::phi().inverse())), BoundaryLabel::torus(tau),
         BoundaryLabel::torus(tau), BoundaryLabel::torus(tau)});
}

/// Connector: chi = 0, boundaries two copies each of T2(psi^-1) and T2(psi).
/// The signature is not stated anywhere; 0 is an assumption and is flagged in
/// reports of any assembly using connectors.
inline Block connector(const Sl2Matrix& psi_matrix) {
    const auto fwd = sl2z::classify(psi_matrix);
    const auto bwd = sl2z::classify(psi_matrix.inverse());
    Block b = detail::make_block(BlockKind::Connector, 0, 0, "assumed",
                                 {BoundaryLabel::torus(bwd), BoundaryLabel::torus(bwd),
                                  BoundaryLabel::torus(fwd), BoundaryLabel::torus(fwd)});
    b.psi = psi_matrix;
    return b;
}

/// Cap: chi = 4, one single-twist torus boundary. Stored in its capping
/// orientation (the boundary mark is reversed), so a positively oriented cap
/// instance glues straight onto a T2(tau) slot and the claimed signature -1
/// is the value contributed by such an instance.
inline Block cap() {
    return detail::make_block(BlockKind::Cap, 4, -1, "claimed",
                              {BoundaryLabel::torus(sl2z::classify(sl2z::twist_a()), -1)});
}

/// SixCap: chi = 0, signature claimed -4, six single-twist torus boundaries
/// oriented to glue onto six T2(tau) slots.
inline Block six_cap() {
    const auto tau = sl2z::classify(sl2z::twist_a());
    Block b = detail::make_block(BlockKind::SixCap, 0, -4, "claimed", {});
    for (int i = 0; i < 6; ++i) b.boundaries.push_back(BoundaryLabel::torus(tau, -1));
    return b;
}

/// Cobordism between a genus-h twist bundle and a torus twist bundle,
/// chi = 0. The genus-h side is recorded reversed so it glues onto a
/// positively oriented genus-h twist boundary.
inline Block twist_cobordism(int h) {
    if (h < 2) throw std::invalid_argument("twist_cobordism: genus must be >= 2");
    Block b = detail::make_block(BlockKind::TwistCobordism, 0, std::nullopt, "",
                                 {BoundaryLabel::surface(h, "tau", -1),
                                  BoundaryLabel::torus(sl2z::classify(sl2z::twist_a()))});
    b.genus_param = h;
    return b;
}

/// Genus-3 twist bundle over the once-punctured genus-3 surface:
/// chi = (2-7)(2-2h) at h = 3, one genus-3 twist boundary.
inline Block genus_three_bundle() {
    const int h = 3;
    const long long chi = static_cast<long long>(2 - 7) * (2 - 2 * h);
    return detail::make_block(BlockKind::GenusThreeBundle, chi, std::nullopt, "",
                              {BoundaryLabel::surface(h, "tau")});
}

/// Torus bundle over a disk with one puncture per given monodromy, chi = 0.
/// Boundaries: one torus per puncture, plus the outer boundary carrying the
/// inverse of the composite (punctures compose right to left).
inline Block torus_disk_bundle(const std::vector<Sl2Matrix>& puncture_monodromies) {
    if (puncture_monodromies.empty())
        throw std::invalid_argument("torus_disk_bundle: need at least one puncture");
    Block b = detail::make_block(BlockKind::TorusDiskBundle, 0, std::nullopt, "", {});
    Sl2Matrix composite = Sl2Matrix::identity();
    for (const auto& m : puncture_monodromies) {
        b.boundaries.push_back(BoundaryLabel::torus(sl2z::classify(m)));
        composite = m * composite;
    }
    b.boundaries.push_back(BoundaryLabel::torus(sl2z::classify(composite.inverse())));
    b.punctures = puncture_monodromies;
    return b;
}

/// Orientation reversal: chi unchanged, claimed signature negated, every
/// boundary label replaced by its reverse.
inline Block reversed(const Block& b) {
    Block out = b;
    if (out.sigma_claimed) out.sigma_claimed = -*out.sigma_claimed;
    for (auto& label : out.boundaries) label = label.reversed();
    return out;
}

struct SlotRef {
    std::size_t instance;
    std::size_t slot;
    bool operator==(const SlotRef& o) const { return instance == o.instance && slot == o.slot; }
};

struct Gluing {
    SlotRef from;
    SlotRef to;
};

/// A multigraph of oriented block instances joined along boundary slots.
/// Every edge is legality-checked on insertion; each slot pairs at most once.
class AssemblyGraph {
public:
    std::size_t add_instance(Block block, int sign = +1) {
        if (sign != +1 && sign != -1)
            throw std::invalid_argument("add_instance: sign must be +-1");
        instances_.emplace_back(std::move(block), sign);
        return instances_.size() - 1;
    }

    void add_gluing(SlotRef a, SlotRef b) {
        const BoundaryLabel la = slot_label(a);
        const BoundaryLabel lb = slot_label(b);
        if (slot_used(a))
            throw SlotInUse("slot already glued: instance " + std::to_string(a.instance) +
                            " slot " + std::to_string(a.slot));
        if (slot_used(b) || (a == b))
            throw SlotInUse("slot already glued: instance " + std::to_string(b.instance) +
                            " slot " + std::to_string(b.slot));
        if (!labels_glueable(la, lb))
            throw IllegalGluing("labels not glueable: " + la.to_string() + " vs " + lb.to_string());
        gluings_.push_back({a, b});
    }

    void remove_gluing(std::size_t index) {
        if (index >= gluings_.size()) throw std::out_of_range("remove_gluing: bad index");
        gluings_.erase(gluings_.begin() + static_cast<std::ptrdiff_t>(index));
    }

    /// Replaces edge endpoints; used by wiring passes. Re-checks legality.
    void rewire(std::size_t e1, std::size_t e2) {
        if (e1 >= gluings_.size() || e2 >= gluings_.size())
            throw std::out_of_range("rewire: bad edge index");
        Gluing g1 = gluings_[e1], g2 = gluings_[e2];
        std::swap(g1.to, g2.to);
        if (!labels_glueable(slot_label(g1.from), slot_label(g1.to)) ||
            !labels_glueable(slot_label(g2.from), slot_label(g2.to)))
            throw IllegalGluing("rewire: labels not glueable");
        gluings_[e1] = g1;
        gluings_[e2] = g2;
    }

    const std::vector<std::pair<Block, int>>& instances() const { return instances_; }
    const std::vector<Gluing>& gluings() const { return gluings_; }

    /// Label of a slot as seen from outside (instance orientation folded in).
    BoundaryLabel slot_label(SlotRef ref) const {
        if (ref.instance >= instances_.size())
            throw UnknownSlot("unknown instance " + std::to_string(ref.instance));
        const auto& [block, sign] = instances_[ref.instance];
        if (ref.slot >= block.boundaries.size())
            throw UnknownSlot("unknown slot " + std::to_string(ref.slot) + " on instance " +
                              std::to_string(ref.instance));
        return block.boundaries[ref.slot].oriented(sign);
    }

    bool slot_used(SlotRef ref) const {
        for (const auto& g : gluings_)
            if (g.from == ref || g.to == ref) return true;
        return false;
    }

    std::vector<SlotRef> free_slots() const {
        std::vector<SlotRef> out;
        for (std::size_t i = 0; i < instances_.size(); ++i)
            for (std::size_t s = 0; s < instances_[i].first.boundaries.size(); ++s)
                if (!slot_used({i, s})) out.push_back({i, s});
        return out;
    }

    /// Every slot paired. The empty assembly is closed by convention.
    bool is_closed() const { return free_slots().empty(); }

    /// Reachability over instances through gluing edges. The empty assembly
    /// is connected by convention.
    bool is_connected() const {
        if (instances_.empty()) return true;
        std::vector<std::vector<std::size_t>> adj(instances_.size());
        for (const auto& g : gluings_) {
            adj[g.from.instance].push_back(g.to.instance);
            adj[g.to.instance].push_back(g.from.instance);
        }
        std::vector<bool> seen(instances_.size(), false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const std::size_t cur = stack.back();
            stack.pop_back();
            for (std::size_t nb : adj[cur])
                if (!seen[nb]) {
                    seen[nb] = true;
                    stack.push_back(nb);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
    }

    /// Re-checks every edge; construction keeps this true.
    bool all_gluings_legal() const {
        for (const auto& g : gluings_)
            if (!labels_glueable(slot_label(g.from), slot_label(g.to))) return false;
        return true;
    }

private:
    std::vector<std::pair<Block, int>> instances_;
    std::vector<Gluing> gluings_;
};

/// Sum of block Euler characteristics; gluing interfaces are circle bundles
/// of Euler characteristic zero, so edges never contribute.
inline long long euler_characteristic(const AssemblyGraph& g) {
    long long chi = 0;
    for (const auto& [block, sign] : g.instances()) chi += block.chi;
    return chi;
}

/// Orientation-weighted sum of claimed signatures; absent as soon as any
/// block lacks a claimed value. Always a claimed quantity, never verified.
inline std::optional<long long> signature_sum(const AssemblyGraph& g) {
    long long sigma = 0;
    for (const auto& [block, sign] : g.instances()) {
        if (!block.sigma_claimed) return std::nullopt;
        sigma += sign * *block.sigma_claimed;
    }
    return sigma;
}

/// The same assembly with every instance orientation flipped.
inline AssemblyGraph mirror(const AssemblyGraph& g) {
    AssemblyGraph out;
    for (const auto& [block, sign] : g.instances()) out.add_instance(block, -sign);
    for (const auto& e : g.gluings()) out.add_gluing(e.from, e.to);
    return out;
}

struct ConjectureChecks {
    bool evaluated = false;
    bool chi_ge_abs_sigma = false;
    bool chi_ge_3abs_sigma = false;
};

struct VerificationReport {
    bool legal = false;
    bool closed = false;
    bool connected = false;
    long long chi_total = 0;
    std::optional<long long> sigma_total;
    std::vector<std::pair<std::string, bool>> certificates;
    ConjectureChecks conjectures;
    std::vector<std::string> notes;

    bool certificates_ok() const {
        return std::all_of(certificates.begin(), certificates.end(),
                           [](const auto& c) { return c.second; });
    }

    bool pass() const {
        if (!legal || !closed || !certificates_ok()) return false;
        if (conjectures.evaluated && !(conjectures.chi_ge_abs_sigma && conjectures.chi_ge_3abs_sigma))
            return false;
        return true;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "report.legal: " << (legal ? "true" : "false") << "\n";
        os << "report.closed: " << (closed ? "true" : "false") << "\n";
        os << "report.connected: " << (connected ? "true" : "false") << "\n";
        os << "report.chi: " << chi_total << "\n";
        if (sigma_total)
            os << "report.sigma_claimed: " << *sigma_total << "\n";
        else
            os << "report.sigma_claimed: absent\n";
        for (const auto& [name, ok] : certificates)
            os << "certificate." << name << ": " << (ok ? "true" : "false") << "\n";
        if (conjectures.evaluated) {
            os << "conjecture.chi_ge_abs_sigma: " << (conjectures.chi_ge_abs_sigma ? "true" : "false") << "\n";
            os << "conjecture.chi_ge_3abs_sigma: " << (conjectures.chi_ge_3abs_sigma ? "true" : "false") << "\n";
        } else {
            os << "conjecture.chi_ge_abs_sigma: not evaluated\n";
            os << "conjecture.chi_ge_3abs_sigma: not evaluated\n";
        }
        for (const auto& note : notes) os << "note: " << note << "\n";
        os << "result: " << (pass() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
};

/// Runs every check on an assembly: edge legality, closedness, connectivity,
/// the chi and sigma ledgers, the global relation certificates, and the
/// geography conjecture screens on closed assemblies with a signature value.
inline VerificationReport verify(const AssemblyGraph& g) {
    VerificationReport r;
    r.legal = g.all_gluings_legal();
    r.closed = g.is_closed();
    r.connected = g.is_connected();
    r.chi_total = euler_characteristic(g);
    r.sigma_total = signature_sum(g);

    r.certificates.emplace_back("phi_twist_decomposition", sl2z::verify_phi_decomposition());
    r.certificates.emplace_back("braid_lantern", mcg::verify_braid_lantern());
    const auto cs = curves::lantern_curve_system();
    r.certificates.emplace_back("h1_lantern", mcg::verify_h1_lantern(cs));
    r.certificates.emplace_back("seven_twist_identity", mcg::verify_seven_twist_identity(cs));

    if (r.closed && r.sigma_total) {
        r.conjectures.evaluated = true;
        const long long abs_sigma = *r.sigma_total < 0 ? -*r.sigma_total : *r.sigma_total;
        r.conjectures.chi_ge_abs_sigma = r.chi_total >= abs_sigma;
        r.conjectures.chi_ge_3abs_sigma = r.chi_total >= 3 * abs_sigma;
        if ((r.chi_total - *r.sigma_total) % 2 != 0)
            r.notes.push_back("warning: chi and sigma have different parity");
    }

    if (r.sigma_total) {
        r.notes.push_back("sigma is a claimed value, not independently verified");
        for (const auto& [block, sign] : g.instances()) {
            if (block.kind == BlockKind::Connector) {
                r.notes.push_back("connector sigma = 0 is an assumption; no stated value exists");
                break;
            }
        }
    }
    return r;
}

}  // namespace asph4::blocks
