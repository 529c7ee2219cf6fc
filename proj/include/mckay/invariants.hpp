#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/quiver_stability.hpp"
#include "mckay/root_systems.hpp"
#include "mckay/series.hpp"

namespace mckay {

enum class PartitionKind { NCDT, DTPlus, DTMinus, PTPlus, PTMinus, GW, Chamber };

/// "NCDT", "DT+", "DT-", "PT+", "PT-", "GW", "Chamber"; parsing ignores case.
std::string to_string(PartitionKind kind);
PartitionKind parse_partition_kind(std::string_view text);

/// +: the q_rho^{-beta} specialization (roots m delta - beta, the PT chamber
/// zeta^{im,+}); -: the q_rho^{+beta} specialization (roots m delta + beta).
enum class Orientation { Plus, Minus };

/// Variables q_0 .. q_{N-1}, total-degree truncation.
SeriesContext q_context(const DynkinLabel& label, int order);
/// Variables u, t_1 .. t_{N-1}, total-degree truncation.
SeriesContext gw_context(const DynkinLabel& label, int order);

/// (1 - (-1)^{alpha_0} q^alpha)^{-alpha_0}.
FactorSpec wall_crossing_factor(const AffineRealRoot& root);
/// Same for a bare vector; throws ImaginaryWall for m delta and
/// InvalidArgument for a non-root.
FactorSpec wall_crossing_factor(const DynkinGraph& graph, const RootVector& root);

struct PartitionResult {
  Series series;
  /// Nontrivial real-root factors in graded order of their roots.
  std::vector<FactorSpec> factors;
  /// Exponent n of the M(-q^delta)^n prefactor; nonzero exactly when the
  /// conjectural imaginary-wall (DT/PT) factor entered the result.
  long macmahon_exponent = 0;
  bool assumed_dt_pt() const { return macmahon_exponent != 0; }
};

/// Nontrivial factors of Z_zeta at order D. Throws NonGenericParameter when
/// zeta pairs to zero with a root of entry sum <= D.
std::vector<FactorSpec> chamber_factors(const DynkinLabel& label, const StabilityParameter& zeta, int order);

/// Z_zeta = [zeta.delta < 0 ? M(-q^delta)^N : 1] * prod_{zeta.alpha < 0} factor(alpha).
PartitionResult chamber_partition_function(const DynkinLabel& label, const StabilityParameter& zeta, int order);

std::vector<FactorSpec> pt_factors(const DynkinLabel& label, Orientation orientation, int order);
Series z_pt(const DynkinLabel& label, Orientation orientation, int order);
Series z_dt(const DynkinLabel& label, Orientation orientation, int order);
Series z_ncdt(const DynkinLabel& label, int order);

/// prod_{beta, m>=1} (1 - t^beta u^m)^{-m} truncated in `context`, which must
/// have N variables ordered (u, t_1, ..., t_{N-1}) and positive degree on
/// every factor monomial.
Series gw_series(const DynkinLabel& label, const SeriesContext& context);
Series z_gw(const DynkinLabel& label, int order);

/// Context for z_gw graded by q-degree after u -> -q^delta, t_rho -> q_rho^{-1}.
SeriesContext gw_q_graded_context(const DynkinLabel& label, int order);
/// Applies u -> -q^delta, t_rho -> q_rho^{-1} to a series in gw_q_graded_context.
Series gw_to_q_variables(const DynkinLabel& label, const Series& gw, int order);

struct Mismatch {
  std::vector<int> exponent;
  std::string lhs;
  std::string rhs;
};

/// Structured result of an identity check.
struct CheckReport {
  std::string name;
  bool passed = false;
  std::size_t compared_terms = 0;
  std::optional<Mismatch> first_mismatch;
  std::string detail;
};

/// Coefficientwise comparison; the first mismatch is the least in graded order.
CheckReport compare_series(std::string name, const Series& lhs, const Series& rhs);

CheckReport check_gw_pt(const DynkinLabel& label, int order);
CheckReport check_crepant(const DynkinLabel& label, int order);

struct BpsEntry {
  int genus;
  std::vector<int> beta;  // curve class over rho_1 .. rho_{N-1}
  Rational value;
};

struct BpsResidual {
  std::vector<int> beta;
  int u_power;
  Rational value;
};

struct BpsTable {
  std::string label;
  int order = 0;
  /// Genus 0 and genus 1 values for every class with |beta| < order that
  /// appears in log Z_GW, in graded order.
  std::vector<BpsEntry> entries;
  /// Coefficients left after removing the fitted genus 0 and genus 1 terms.
  std::vector<BpsResidual> residuals;
  bool residual_zero() const { return residuals.empty(); }
  /// n_{g,beta}; zero for classes that do not appear.
  Rational value(int genus, const std::vector<int>& beta) const;
};

BpsTable bps_extract(const DynkinLabel& label, int order);
/// Passes when n_0 = -1 exactly on finite positive roots, every other n_g is
/// zero, and nothing is left over.
CheckReport check_bps(const BpsTable& table);

struct D5Report {
  std::vector<CheckReport> parts;
  bool passed() const;
};

/// Recomputes the binary dihedral (D5) worked example and diffs it against
/// transcribed golden data.
D5Report verify_d5_example(int order);

}  // namespace mckay
