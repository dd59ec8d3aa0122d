#include "tsboot/series.hpp"

#include <cmath>
#include <string>

#include "tsboot/errors.hpp"

namespace tsboot {

Series::Series(std::vector<double> values) {
  if (values.empty()) throw InputError("Series: empty value sequence");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InputError("Series: non-finite value at position " + std::to_string(i + 1));
    }
  }
  values_ = std::make_shared<const std::vector<double>>(std::move(values));
}

}  // namespace tsboot
