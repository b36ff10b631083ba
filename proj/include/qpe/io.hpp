#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qpe {

/// Minimal JSON writer. Floats are printed with 17 significant digits so
/// every double round-trips losslessly and output is byte-stable.
class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(const std::string& v);
  JsonWriter& value(const char* v);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long v);
  JsonWriter& value(bool v);
  JsonWriter& value(const Eigen::MatrixXd& m);  // row-major nested arrays
  JsonWriter& value(const std::vector<double>& v);
  JsonWriter& value(const std::vector<int>& v);

 private:
  void pre_value();
  std::string out_;
  std::vector<bool> needs_comma_;
  bool after_key_ = false;
};

std::string format_double(double v);
std::string json_escape(const std::string& s);

}  // namespace qpe
