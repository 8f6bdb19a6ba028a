#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "railqec/layout.hpp"
#include "railqec/surface_code.hpp"

namespace railqec {

enum class GateKind { CNOT, CZ };
enum class InstanceKind { Shuttle, Entangle };
enum class Direction { Forward, Reverse };

struct ScheduledGate {
    int check = 0;  // check qubit id
    int data = 0;   // data qubit id
    GateKind kind = GateKind::CNOT;
};

struct ScheduleInstance {
    InstanceKind kind = InstanceKind::Entangle;
    int t = 0;       // time index within the round
    int offset = 0;  // relative displacement of the check block (entangle only)
    std::vector<ScheduledGate> gates;
};

struct Schedule {
    Direction direction = Direction::Forward;
    Species shuttled = Species::Check;
    std::vector<ScheduleInstance> instances;

    int num_entangle() const {
        int n = 0;
        for (const auto& i : instances) n += i.kind == InstanceKind::Entangle;
        return n;
    }
    int num_shuttle() const { return static_cast<int>(instances.size()) - num_entangle(); }
};

// One pass of the Train Schedule. The check block starts displaced by
// x = d-1 and steps down to x = -d, one slot per shuttle instance; a check in
// slot c faces the data in slot c - x, so every stabilizer incidence
// (check c, data s) fires exactly once, at the instance with x = c - s.
inline Schedule build_schedule(const LayoutMap& layout, const SurfaceCode& code) {
    const int d = code.distance;
    Schedule sched;
    sched.shuttled = layout.shuttled;

    std::map<int, std::vector<ScheduledGate>> gates_by_offset;
    for (size_t i = 0; i < code.plaquettes.size(); i++) {
        const auto& p = code.plaquettes[i];
        int check = code.check_id(static_cast<int>(i));
        int c_slot = layout.slot_of(check);
        for (auto [q, op] : p.stabilizer.support()) {
            int x = c_slot - layout.slot_of(q);
            if (x > d - 1 || x < -d) {
                std::ostringstream msg;
                msg << "incidence check slot " << c_slot << " / data slot " << layout.slot_of(q)
                    << " never overlaps within the pass (offset " << x << ")";
                throw std::runtime_error(msg.str());
            }
            GateKind kind = (op == Pauli::X) ? GateKind::CNOT : GateKind::CZ;
            gates_by_offset[x].push_back({check, q, kind});
        }
    }

    int t = 0;
    for (int x = d - 1; x >= -d; x--) {
        ScheduleInstance ent;
        ent.kind = InstanceKind::Entangle;
        ent.t = t++;
        ent.offset = x;
        ent.gates = gates_by_offset.count(x) ? gates_by_offset[x] : std::vector<ScheduledGate>{};
        std::sort(ent.gates.begin(), ent.gates.end(),
                  [](const ScheduledGate& l, const ScheduledGate& r) { return l.check < r.check; });
        sched.instances.push_back(std::move(ent));
        if (x > -d) {
            ScheduleInstance sh;
            sh.kind = InstanceKind::Shuttle;
            sh.t = t++;
            sh.offset = x;  // position before the step; block moves x -> x-1
            sched.instances.push_back(sh);
        }
    }
    return sched;
}

inline Schedule reverse_schedule(const Schedule& sched) {
    Schedule out;
    out.direction = sched.direction == Direction::Forward ? Direction::Reverse : Direction::Forward;
    out.shuttled = sched.shuttled;
    out.instances.assign(sched.instances.rbegin(), sched.instances.rend());
    for (size_t t = 0; t < out.instances.size(); t++) out.instances[t].t = static_cast<int>(t);
    return out;
}

namespace detail {

// instance index of every (check, data) gate
inline std::map<std::pair<int, int>, int> gate_times(const Schedule& sched) {
    std::map<std::pair<int, int>, int> times;
    for (size_t i = 0; i < sched.instances.size(); i++)
        for (const auto& g : sched.instances[i].gates) times[{g.check, g.data}] = static_cast<int>(i);
    return times;
}

}  // namespace detail

// Stabilizer pairs sharing two data qubits must meet them in the same
// relative order, otherwise the measured operators fail to commute.
inline bool verify_commutation_order(const Schedule& sched, const SurfaceCode& code) {
    auto times = detail::gate_times(sched);
    for (size_t i = 0; i < code.plaquettes.size(); i++) {
        for (size_t j = i + 1; j < code.plaquettes.size(); j++) {
            std::vector<int> shared;
            for (auto [q, op] : code.plaquettes[i].stabilizer.support())
                if (code.plaquettes[j].stabilizer.at(q) != Pauli::I) shared.push_back(q);
            if (shared.size() < 2) continue;
            int ci = code.check_id(static_cast<int>(i));
            int cj = code.check_id(static_cast<int>(j));
            for (size_t u = 0; u < shared.size(); u++) {
                for (size_t v = u + 1; v < shared.size(); v++) {
                    auto ti_u = times.find({ci, shared[u]});
                    auto ti_v = times.find({ci, shared[v]});
                    auto tj_u = times.find({cj, shared[u]});
                    auto tj_v = times.find({cj, shared[v]});
                    if (ti_u == times.end() || ti_v == times.end() || tj_u == times.end() ||
                        tj_v == times.end())
                        return false;
                    bool order_i = ti_u->second < ti_v->second;
                    bool order_j = tj_u->second < tj_v->second;
                    if (order_i != order_j) return false;
                }
            }
        }
    }
    return true;
}

namespace detail {

// Mid-cycle check faults propagate to the data qubits of the remaining
// gates: X on the check walks through a CNOT as X and through a CZ as Z;
// Z on the check commutes with both and only corrupts the outcome.
inline PauliString propagate_check_fault(Pauli fault, const std::vector<ScheduledGate>& rest) {
    PauliString err;
    bool has_x = fault == Pauli::X || fault == Pauli::Y;
    if (!has_x) return err;
    for (const auto& g : rest) {
        Pauli e = g.kind == GateKind::CNOT ? Pauli::X : Pauli::Z;
        err.set(g.data, pauli_mul(err.at(g.data), e));
    }
    return err;
}

// True if err matches some minimum-weight logical representative on its
// whole support; translates of both the vertical and horizontal logicals
// count as representatives.
inline bool aligned_with_logical(const PauliString& err, const SurfaceCode& code) {
    if (err.weight() == 0) return false;
    const int d = code.distance;
    for (int col = 0; col < d; col++) {
        bool match = true;
        for (auto [q, op] : err.support()) {
            auto g = code.data_coord(q);
            if (g.x != col || detail::logical_site_pauli(code.variant, true, g.x, g.y) != op) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    for (int row = 0; row < d; row++) {
        bool match = true;
        for (auto [q, op] : err.support()) {
            auto g = code.data_coord(q);
            if (g.y != row || detail::logical_site_pauli(code.variant, false, g.x, g.y) != op) {
                match = false;
                break;
            }
        }
        if (match) return true;
    }
    return false;
}

}  // namespace detail

// Inject X/Y/Z on the check between consecutive gates of every weight-4
// plaquette cycle and confirm no resulting data error (nor its product with
// the stabilizer) lies along a logical operator.
inline bool verify_hook_safety(const Schedule& sched, const SurfaceCode& code) {
    auto times = detail::gate_times(sched);
    for (size_t i = 0; i < code.plaquettes.size(); i++) {
        const auto& p = code.plaquettes[i];
        if (!p.is_bulk()) continue;
        int check = code.check_id(static_cast<int>(i));

        std::vector<ScheduledGate> cycle;
        for (auto [q, op] : p.stabilizer.support())
            cycle.push_back({check, q, op == Pauli::X ? GateKind::CNOT : GateKind::CZ});
        std::sort(cycle.begin(), cycle.end(), [&](const ScheduledGate& l, const ScheduledGate& r) {
            return times.at({l.check, l.data}) < times.at({r.check, r.data});
        });

        for (size_t cut = 1; cut < cycle.size(); cut++) {
            std::vector<ScheduledGate> rest(cycle.begin() + cut, cycle.end());
            for (Pauli fault : {Pauli::X, Pauli::Y, Pauli::Z}) {
                PauliString err = detail::propagate_check_fault(fault, rest);
                if (err.weight() != 2) continue;
                if (detail::aligned_with_logical(err, code)) return false;
                if (detail::aligned_with_logical(err.times(p.stabilizer), code)) return false;
            }
        }
    }
    return true;
}

// Deliberately hook-aligned variant used to demonstrate the effective-distance
// loss: the two middle gates of every plaquette in one color class are
// swapped, turning each mid-cycle hook through 90 degrees. The result is
// still a well-formed gate sequence but no longer a valid Train Schedule.
inline Schedule hook_aligned_schedule(const Schedule& sched, const SurfaceCode& code,
                                      PlaquetteColor victim) {
    auto times = detail::gate_times(sched);
    Schedule out = sched;
    for (size_t i = 0; i < code.plaquettes.size(); i++) {
        const auto& p = code.plaquettes[i];
        if (!p.is_bulk() || p.color != victim) continue;
        int check = code.check_id(static_cast<int>(i));
        std::vector<std::pair<int, int>> cycle;  // (instance idx, data)
        for (auto [q, op] : p.stabilizer.support()) cycle.push_back({times.at({check, q}), q});
        std::sort(cycle.begin(), cycle.end());
        // swap the data targets of the 2nd and 3rd gates
        auto swap_gate = [&](int inst, int from_data, int to_data) {
            for (auto& g : out.instances[inst].gates) {
                if (g.check == check && g.data == from_data) {
                    g.data = to_data;
                    g.kind = code.plaquettes[i].stabilizer.at(to_data) == Pauli::X ? GateKind::CNOT
                                                                                  : GateKind::CZ;
                    return;
                }
            }
        };
        swap_gate(cycle[1].first, cycle[1].second, cycle[2].second);
        swap_gate(cycle[2].first, cycle[2].second, cycle[1].second);
    }
    return out;
}

// One line per gate: `t, x, check-slot, data-slot, gate-kind`.
inline std::string export_schedule_text(const Schedule& sched, const LayoutMap& layout) {
    std::ostringstream out;
    for (const auto& inst : sched.instances) {
        if (inst.kind != InstanceKind::Entangle) continue;
        for (const auto& g : inst.gates)
            out << inst.t << ", " << inst.offset << ", " << layout.slot_of(g.check) << ", "
                << layout.slot_of(g.data) << ", " << (g.kind == GateKind::CNOT ? "CNOT" : "CZ")
                << "\n";
    }
    return out.str();
}

}  // namespace railqec
