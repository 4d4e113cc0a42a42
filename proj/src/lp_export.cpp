#include "osp/lp_export.hpp"

#include <sstream>

namespace osp {

namespace {

int64_t checked_mul(int64_t a, int64_t b) {
  __int128 r = __int128(a) * b;
  if (r > INT64_MAX || r < INT64_MIN)
    throw Unsupported("objective coefficient overflows 63 bits");
  return int64_t(r);
}

std::string tag(const char* base, std::initializer_list<int64_t> parts) {
  std::string s = base;
  for (int64_t p : parts) {
    s.push_back('_');
    s += std::to_string(p);
  }
  return s;
}

// Linear row builder; renders "name: terms <op> rhs" with soft line wraps.
class Row {
 public:
  void add(int64_t coeff, std::string var) {
    if (coeff != 0) terms_.emplace_back(coeff, std::move(var));
  }
  bool empty() const { return terms_.empty(); }

  void render(std::ostream& out, const std::string& name) const {
    std::string line = " " + name + ":";
    bool first = true;
    for (const auto& [c, v] : terms_) {
      std::string piece;
      if (first) {
        piece = c < 0 ? "- " : "";
      } else {
        piece = c < 0 ? "- " : "+ ";
      }
      int64_t mag = c < 0 ? -c : c;
      if (mag != 1) piece += std::to_string(mag) + " ";
      piece += v;
      if (line.size() + piece.size() + 1 > 76) {
        out << line << "\n";
        line = "  ";
      }
      line += " " + piece;
      first = false;
    }
    if (terms_.empty()) line += " 0 S_1_1";
    out << line;
  }

  void render(std::ostream& out, const std::string& name, const char* op,
              int64_t rhs) const {
    render(out, name);
    out << " " << op << " " << rhs << "\n";
  }

 private:
  std::vector<std::pair<int64_t, std::string>> terms_;
};

}  // namespace

std::string export_ilp(const Instance& raw, const ObjectiveWeights& weights) {
  if (raw.jobs.empty()) throw Unsupported("instance has no jobs");
  if (!weights.valid()) throw Unsupported("invalid objective weights");

  // uniform interval lists plus the trailing [l,l] slot for empty batches
  Instance inst = normalize_intervals(raw);
  for (auto& m : inst.machines) m.availability.push_back({inst.horizon, inst.horizon});

  const int n = inst.num_jobs();
  const int k = inst.num_machines();
  const int a = inst.attribute_count;
  const int ni = int(inst.machines.front().availability.size());
  const int64_t l = inst.horizon;
  int64_t max_t = 0;
  for (const auto& j : inst.jobs) max_t = std::max(max_t, j.max_proc);
  const int64_t max_st = inst.max_setup_time();
  const int64_t max_sc = inst.max_setup_cost();

  const int64_t scale = objective_scale(inst);
  const int64_t cp = checked_mul(weights.proc, scale) / average_min_proc(inst);
  const int64_t csc =
      checked_mul(weights.setup, scale) / std::max<int64_t>(max_sc, 1);
  const int64_t ct = checked_mul(weights.tardy, scale);

  // matrices extended with attribute 0 (empty batches): zero either way
  auto stx = [&](int q, int r) {
    return q == 0 || r == 0 ? 0 : inst.setup_times.at(q, r);
  };
  auto scx = [&](int q, int r) {
    return q == 0 || r == 0 ? 0 : inst.setup_costs.at(q, r);
  };

  auto X = [](int m, int b, int j) { return tag("X", {m, b, j}); };
  auto S = [](int m, int b) { return tag("S", {m, b}); };
  auto P = [](int m, int b) { return tag("P", {m, b}); };
  auto A = [](int m, int b, int q) { return tag("A", {m, b, q}); };
  auto IV = [](int m, int b, int i) { return tag("I", {m, b, i}); };
  auto T = [](int m, int b, int j) { return tag("T", {m, b, j}); };
  auto V = [](int m, int b) { return tag("V", {m, b}); };
  auto ST = [](int m, int b) { return tag("st", {m, b}); };
  auto SC = [](int m, int b) { return tag("sc", {m, b}); };
  auto Y = [](int m, int b, int q, int r) { return tag("Y", {m, b, q, r}); };

  std::ostringstream out;
  out << "\\ integer model, scaled objective (factor " << scale * n
      << " * total weight " << weights.total() << ")\n";

  out << "Minimize\n";
  {
    Row obj;
    for (int m = 1; m <= k; ++m)
      for (int b = 1; b <= n; ++b) obj.add(cp, P(m, b));
    for (int m = 1; m <= k; ++m)
      for (int b = 1; b < n; ++b) obj.add(csc, SC(m, b));
    for (int m = 1; m <= k; ++m)
      for (int b = 1; b <= n; ++b)
        for (const auto& j : inst.jobs)
          if (j.due) obj.add(ct, T(m, b, j.id));
    // the first batch also pays the setup cost away from the initial state
    for (int m = 1; m <= k; ++m)
      for (int q = 1; q <= a; ++q)
        obj.add(checked_mul(csc, scx(inst.machine(m).initial_state, q)),
                A(m, 1, q));
    obj.render(out, "obj");
    out << "\n";
  }

  out << "Subject To\n";

  for (const auto& j : inst.jobs) {
    Row r;
    for (int m = 1; m <= k; ++m)
      for (int b = 1; b <= n; ++b) r.add(1, X(m, b, j.id));
    r.render(out, tag("assign", {j.id}), "=", 1);

    Row e;
    for (int m : j.eligible)
      for (int b = 1; b <= n; ++b) e.add(1, X(m, b, j.id));
    e.render(out, tag("mach", {j.id}), "=", 1);
  }

  for (int m = 1; m <= k; ++m)
    for (int b = 1; b <= n; ++b)
      for (const auto& j : inst.jobs) {
        if (j.release > 0) {
          Row r;
          r.add(j.release, X(m, b, j.id));
          r.add(-1, S(m, b));
          r.render(out, tag("rel", {m, b, j.id}), "<=", 0);
        }
        Row lo;
        lo.add(j.min_proc, X(m, b, j.id));
        lo.add(-1, P(m, b));
        lo.render(out, tag("pmin", {m, b, j.id}), "<=", 0);
        if (j.max_proc < max_t) {
          Row hi;
          hi.add(1, P(m, b));
          hi.add(max_t - j.max_proc, X(m, b, j.id));
          hi.render(out, tag("pmax", {m, b, j.id}), "<=", max_t);
        }
      }

  for (int m = 1; m <= k; ++m)
    for (int b = 1; b < n; ++b) {
      Row r;
      r.add(1, S(m, b));
      r.add(1, P(m, b));
      r.add(1, ST(m, b));
      r.add(-1, S(m, b + 1));
      r.render(out, tag("seq", {m, b}), "<=", 0);
    }

  for (int m = 1; m <= k; ++m)
    for (int b = 1; b <= n; ++b) {
      Row r;
      for (const auto& j : inst.jobs) r.add(j.size, X(m, b, j.id));
      r.render(out, tag("cap", {m, b}), "<=", inst.machine(m).capacity);
    }

  for (int m = 1; m <= k; ++m)
    for (int b = 1; b <= n; ++b) {
      for (const auto& j : inst.jobs) {
        Row lo;
        lo.add(j.attribute, X(m, b, j.id));
        for (int q = 1; q <= a; ++q) lo.add(-q, A(m, b, q));
        lo.render(out, tag("amin", {m, b, j.id}), "<=", 0);
        Row hi;
        for (int q = 1; q <= a; ++q) hi.add(q, A(m, b, q));
        hi.add(a - j.attribute, X(m, b, j.id));
        hi.render(out, tag("amax", {m, b, j.id}), "<=", a);
      }
      Row one;
      for (int q = 0; q <= a; ++q) one.add(1, A(m, b, q));
      one.render(out, tag("onehot", {m, b}), "=", 1);
    }

  for (int m = 1; m <= k; ++m) {
    const auto& av = inst.machine(m).availability;
    for (int b = 1; b <= n; ++b) {
      for (int i = 1; i <= ni; ++i) {
        const Interval& iv = av[size_t(i - 1)];
        if (iv.start > 0) {
          Row lo;
          lo.add(iv.start, IV(m, b, i));
          lo.add(-1, S(m, b));
          lo.render(out, tag("ivlo", {m, b, i}), "<=", 0);
        }
        if (iv.end < l) {
          Row hi;
          hi.add(1, S(m, b));
          hi.add(l - iv.end, IV(m, b, i));
          hi.render(out, tag("ivhi", {m, b, i}), "<=", l);
        }
        // the whole batch, plus the setup leading into it, fits the interval
        Row fit;
        if (b == 1) {
          fit.add(iv.start, IV(m, b, i));
          fit.add(-1, S(m, b));
          for (int q = 1; q <= a; ++q)
            fit.add(stx(inst.machine(m).initial_state, q), A(m, 1, q));
          fit.render(out, tag("fit0", {m, i}), "<=", 0);
        } else {
          fit.add(iv.start, IV(m, b, i));
          fit.add(-1, S(m, b));
          fit.add(1, ST(m, b - 1));
          fit.render(out, tag("fit1", {m, b, i}), "<=", 0);
        }
        Row end;
        end.add(1, S(m, b));
        end.add(1, P(m, b));
        end.add(l - iv.end, IV(m, b, i));
        end.render(out, tag("fit2", {m, b, i}), "<=", l);
      }
      Row one;
      for (int i = 1; i <= ni; ++i) one.add(1, IV(m, b, i));
      one.render(out, tag("ivone", {m, b}), "=", 1);
    }
  }

  for (const auto& j : inst.jobs) {
    if (!j.due) continue;
    int64_t lt = *j.due;
    for (int m = 1; m <= k; ++m)
      for (int b = 1; b <= n; ++b) {
        Row link;
        link.add(1, T(m, b, j.id));
        link.add(-1, X(m, b, j.id));
        link.render(out, tag("tx", {m, b, j.id}), "<=", 0);
        Row ontime;  // assigned and not tardy: end <= lt
        ontime.add(1, S(m, b));
        ontime.add(1, P(m, b));
        ontime.add(l - lt, X(m, b, j.id));
        ontime.add(lt - l, T(m, b, j.id));
        ontime.render(out, tag("tlate", {m, b, j.id}), "<=", l);
        Row strict;  // tardy only when end >= lt + 1
        strict.add(1, S(m, b));
        strict.add(1, P(m, b));
        strict.add(-(l + 1), T(m, b, j.id));
        strict.render(out, tag("tstrict", {m, b, j.id}), ">=", lt - l);
      }
  }

  for (int m = 1; m <= k; ++m)
    for (int b = 1; b <= n; ++b) {
      Row occupied;
      for (const auto& j : inst.jobs) occupied.add(1, X(m, b, j.id));
      occupied.add(1, V(m, b));
      occupied.render(out, tag("vac1", {m, b}), ">=", 1);
      for (const auto& j : inst.jobs) {
        Row r;
        r.add(1, X(m, b, j.id));
        r.add(1, V(m, b));
        r.render(out, tag("vac2", {m, b, j.id}), "<=", 1);
      }
      Row start;
      start.add(l, V(m, b));
      start.add(-1, S(m, b));
      start.render(out, tag("vacs", {m, b}), "<=", 0);
      Row proc;
      proc.add(1, P(m, b));
      proc.add(max_t, V(m, b));
      proc.render(out, tag("vacp", {m, b}), "<=", max_t);
      Row slot;
      slot.add(1, V(m, b));
      slot.add(-1, IV(m, b, ni));
      slot.render(out, tag("vaci", {m, b}), "<=", 0);
      Row attr;
      for (int q = 1; q <= a; ++q) attr.add(q, A(m, b, q));
      attr.add(a, V(m, b));
      attr.render(out, tag("vaca", {m, b}), "<=", a);
      if (b < n) {
        Row order;
        order.add(1, V(m, b));
        order.add(-1, V(m, b + 1));
        order.render(out, tag("vaco", {m, b}), "<=", 0);
      }
    }

  for (int m = 1; m <= k; ++m)
    for (int b = 1; b < n; ++b) {
      Row std_;
      std_.add(1, ST(m, b));
      for (int q = 1; q <= a; ++q)
        for (int r = 1; r <= a; ++r) std_.add(-stx(q, r), Y(m, b, q, r));
      std_.render(out, tag("stdef", {m, b}), "=", 0);
      Row scd;
      scd.add(1, SC(m, b));
      for (int q = 1; q <= a; ++q)
        for (int r = 1; r <= a; ++r) scd.add(-scx(q, r), Y(m, b, q, r));
      scd.render(out, tag("scdef", {m, b}), "=", 0);
      for (int q = 0; q <= a; ++q)
        for (int r = 0; r <= a; ++r) {
          Row y1;
          y1.add(1, Y(m, b, q, r));
          y1.add(-1, A(m, b, q));
          y1.render(out, tag("y1", {m, b, q, r}), "<=", 0);
          Row y2;
          y2.add(1, Y(m, b, q, r));
          y2.add(-1, A(m, b + 1, r));
          y2.render(out, tag("y2", {m, b, q, r}), "<=", 0);
          Row y3;
          y3.add(1, A(m, b, q));
          y3.add(1, A(m, b + 1, r));
          y3.add(-1, Y(m, b, q, r));
          y3.render(out, tag("y3", {m, b, q, r}), "<=", 1);
        }
    }

  out << "Bounds\n";
  for (int m = 1; m <= k; ++m)
    for (int b = 1; b <= n; ++b) {
      out << " 0 <= " << S(m, b) << " <= " << l << "\n";
      out << " 0 <= " << P(m, b) << " <= " << max_t << "\n";
    }
  for (int m = 1; m <= k; ++m)
    for (int b = 1; b < n; ++b) {
      out << " 0 <= " << ST(m, b) << " <= " << max_st << "\n";
      out << " 0 <= " << SC(m, b) << " <= " << max_sc << "\n";
    }

  out << "Binary\n";
  for (int m = 1; m <= k; ++m)
    for (int b = 1; b <= n; ++b) {
      for (const auto& j : inst.jobs) out << " " << X(m, b, j.id) << "\n";
      for (int q = 0; q <= a; ++q) out << " " << A(m, b, q) << "\n";
      for (int i = 1; i <= ni; ++i) out << " " << IV(m, b, i) << "\n";
      for (const auto& j : inst.jobs)
        if (j.due) out << " " << T(m, b, j.id) << "\n";
      out << " " << V(m, b) << "\n";
      if (b < n)
        for (int q = 0; q <= a; ++q)
          for (int r = 0; r <= a; ++r) out << " " << Y(m, b, q, r) << "\n";
    }

  out << "Generals\n";
  for (int m = 1; m <= k; ++m)
    for (int b = 1; b <= n; ++b) {
      out << " " << S(m, b) << "\n";
      out << " " << P(m, b) << "\n";
      if (b < n) out << " " << ST(m, b) << "\n" << " " << SC(m, b) << "\n";
    }

  out << "End\n";
  return out.str();
}

}  // namespace osp
