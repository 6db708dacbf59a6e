#pragma once

#include "minmaxcert/attack_set.hpp"
#include "minmaxcert/certify.hpp"
#include "minmaxcert/convert.hpp"
#include "minmaxcert/model.hpp"

#include <string>

namespace minmax {

/// Schemas (all numbers finite):
///   model:      {"d":int,"m":int,"n":int,"a":[m][n][d],"b":[m][n]}
///   attack set: {"d":int,"constraints":[
///                 {"type":"norm_ball","norm":"l1|l2|linf","center":[d],"radius":num}
///                 | {"type":"half_space","psi":[d],"omega":num}
///                 | {"type":"box","lo":[d],"hi":[d]} ]}
///   relu net:   {"d":int,"h":int,"W1":[h][d],"b1":[h],"w2":[h],"b2":num}
/// Parse errors name the offending field. Writers emit a stable key order
/// and 17-significant-digit floats so identical inputs give identical bytes.
MinMaxModel parse_model_json(const std::string& text);
AttackSet parse_attack_set_json(const std::string& text);
ReluNet1H parse_relu_net_json(const std::string& text);

std::string model_to_json(const MinMaxModel& model);
std::string attack_set_to_json(const AttackSet& set);
std::string certification_to_json(const CertificationResult& result);
std::string attack_to_json(const Vector& attack, double value);

MinMaxModel load_model(const std::string& path);
AttackSet load_attack_set(const std::string& path);
ReluNet1H load_relu_net(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

const char* norm_name(Norm norm);
Norm parse_norm(const std::string& name);

} // namespace minmax
