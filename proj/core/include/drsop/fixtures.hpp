#pragma once

#include <string_view>

namespace drsop::fixtures {

/// The bundled experiment dataset: nodes A-H with measured capacities plus
/// synthetic nodes I-L (clones of E-H), 60 services, 4 resource kinds.
/// Identical to data/paper.drsop.
std::string_view paper_instance();

/// Measured rows only: nodes A-H, 60 services. Several services reference
/// initial nodes I-L that this document does not define, so they parse as
/// homeless-eligible. Identical to data/paper_tables.drsop.
std::string_view paper_tables_instance();

/// The five-scenario benchmark ladder (Test I .. Test V). Identical to
/// data/paper_scenarios.txt.
std::string_view paper_scenarios();

} // namespace drsop::fixtures
