#include "bpps/exact.hpp"

#include <stdexcept>

namespace bpps {

namespace {

struct EnumState {
    const Instance& inst;
    std::vector<std::vector<int>> bins;
    std::vector<std::vector<int>> load;      // per bin, per scenario
    std::vector<std::vector<char>> touched;  // per bin, per scenario
    std::vector<int> touch_count;            // per scenario: bins touching it
    int cur_max = 0;
    int best_val;
    Solution best;

    explicit EnumState(const Instance& i)
        : inst(i), touch_count(i.num_scenarios(), 0), best_val(i.num_items() + 1) {}

    void dfs(int item) {
        if (cur_max >= best_val) return; // touched-bin counts only grow
        if (item == inst.num_items()) {
            best_val = cur_max;
            best.bins = bins;
            return;
        }
        const int s = inst.size(item);
        // existing bins
        for (std::size_t b = 0; b < bins.size(); ++b) {
            bool fits = true;
            for (int k : inst.scenarios_of(item))
                if (load[b][k] + s > inst.capacity()) {
                    fits = false;
                    break;
                }
            if (!fits) continue;
            std::vector<int> newly;
            for (int k : inst.scenarios_of(item)) {
                load[b][k] += s;
                if (!touched[b][k]) {
                    touched[b][k] = 1;
                    newly.push_back(k);
                    ++touch_count[k];
                }
            }
            const int saved_max = cur_max;
            for (int k : newly) cur_max = std::max(cur_max, touch_count[k]);
            bins[b].push_back(item);
            dfs(item + 1);
            bins[b].pop_back();
            cur_max = saved_max;
            for (int k : newly) {
                touched[b][k] = 0;
                --touch_count[k];
            }
            for (int k : inst.scenarios_of(item)) load[b][k] -= s;
        }
        // fresh bin (canonical: item becomes its smallest element)
        bins.push_back({item});
        load.emplace_back(inst.num_scenarios(), 0);
        touched.emplace_back(inst.num_scenarios(), 0);
        const int saved_max = cur_max;
        for (int k : inst.scenarios_of(item)) {
            load.back()[k] = s;
            touched.back()[k] = 1;
            ++touch_count[k];
            cur_max = std::max(cur_max, touch_count[k]);
        }
        dfs(item + 1);
        cur_max = saved_max;
        for (int k : inst.scenarios_of(item)) --touch_count[k];
        bins.pop_back();
        load.pop_back();
        touched.pop_back();
    }
};

} // namespace

Solution solve_enumeration(const Instance& inst, int max_items) {
    if (inst.num_items() > max_items)
        throw std::invalid_argument("solve_enumeration: instance too large");
    if (inst.num_items() == 0) return {};
    EnumState st(inst);
    st.dfs(0);
    return st.best;
}

} // namespace bpps
