cc070 cc070 cc074 cc070 cc043 cc045
cc068 cc061 cc071 cc079 cc070 cc082
cc072 cc043 cc045 cc070 cc070 cc070 cc070 cc070
cc043 cc045 cc079 cc070 cc071
cc070 cc125 cc070 cc055 cc041 cc076 cc098
cc072 cc108 cc074 cc071 cc063 cc028
cc070 cc071 cc077 cc070 cc074 cc070 cc071 cc070
cc149 cc073 cc070 cc071 cc149 cc081 cc077 cc070
cc070 cc071 cc070 cc053 cc062 cc070 cc072 cc072 cc076
cc113 cc070 cc071 cc071 cc072 cc079
cc134 cc085 cc027 cc048 cc073 cc070
cc073 cc071 cc068 cc061 cc071 cc074 cc071
cc068 cc061 cc070 cc133 cc070 cc070 cc072 cc070 cc071
cc070 cc149 cc072 cc055 cc041 cc071 cc073
cc043 cc045 cc071 cc116 cc149
cc055 cc041 cc070 cc074 cc070
cc149 cc027 cc048 cc149 cc070 cc071
cc070 cc071 cc139 cc085 cc071
cc076 cc071 cc084 cc071 cc063 cc028
cc070 cc077 cc092 cc053 cc062
cc149 cc071 cc089 cc070 cc149 cc072 cc071
cc070 cc149 cc093 cc070 cc070
cc071 cc102 cc149 cc072 cc070 cc070
cc070 cc071 cc073 cc070 cc070
cc070 cc071 cc070 cc072 cc077
cc070 cc071 cc070 cc070 cc070 cc091 cc149 cc076 cc074
cc143 cc024 cc025 cc071 cc071
cc072 cc070 cc149 cc053 cc035
cc081 cc070 cc070 cc027 cc048
cc070 cc077 cc072 cc071 cc073 cc072 cc070 cc076 cc070
cc124 cc070 cc070 cc080 cc072 cc071
cc071 cc070 cc070 cc070 cc074 cc070
cc070 cc068 cc061 cc070 cc103
cc076 cc073 cc070 cc092 cc071 cc070 cc070
cc070 cc055 cc041 cc149 cc091 cc070
cc070 cc076 cc053 cc035 cc070 cc072 cc076 cc095
cc071 cc063 cc028 cc083 cc071 cc079 cc070 cc071
cc071 cc073 cc070 cc070 cc068 cc061
cc070 cc070 cc070 cc070 cc070 cc071 cc071
cc063 cc028 cc075 cc071 cc071 cc070 cc075 cc070
cc070 cc070 cc070 cc149 cc072 cc070 cc073
cc070 cc093 cc070 cc072 cc075 cc070 cc071
cc063 cc028 cc070 cc070 cc070
cc068 cc061 cc149 cc070 cc149
cc071 cc072 cc070 cc068 cc061
cc071 cc111 cc077 cc070 cc053 cc035 cc070 cc071 cc070
cc070 cc073 cc101 cc068 cc061 cc070
cc071 cc071 cc072 cc076 cc123 cc068 cc061
cc091 cc075 cc070 cc092 cc082 cc070 cc043 cc045 cc127
cc070 cc070 cc070 cc070 cc133 cc103 cc083
cc082 cc149 cc072 cc130 cc071
cc093 cc073 cc149 cc071 cc078 cc072 cc149
cc149 cc092 cc070 cc072 cc074 cc149
cc070 cc082 cc070 cc070 cc070
cc070 cc070 cc070 cc070 cc070 cc070 cc072
cc080 cc070 cc070 cc074 cc070 cc073 cc143 cc078
cc070 cc070 cc070 cc070 cc070
cc071 cc068 cc061 cc070 cc082 cc072
cc043 cc045 cc078 cc136 cc070
cc072 cc070 cc071 cc071 cc070 cc070
cc070 cc053 cc035 cc072 cc072 cc149
cc072 cc070 cc070 cc055 cc041
cc078 cc070 cc071 cc070 cc070 cc149 cc081 cc136
cc070 cc070 cc070 cc071 cc070 cc102
cc070 cc137 cc068 cc061 cc070 cc070 cc073 cc070
cc070 cc073 cc142 cc149 cc073 cc071
cc091 cc073 cc085 cc073 cc149 cc070 cc070 cc071
cc070 cc070 cc070 cc068 cc061 cc083
cc077 cc070 cc149 cc075 cc075
cc072 cc131 cc070 cc070 cc071 cc076 cc070 cc070
cc070 cc072 cc070 cc053 cc062
cc074 cc070 cc070 cc072 cc070
cc075 cc074 cc070 cc072 cc071
cc071 cc077 cc071 cc071 cc070 cc073 cc071
cc070 cc072 cc070 cc070 cc070 cc070 cc070 cc078
cc070 cc091 cc072 cc070 cc053 cc062 cc083
cc149 cc027 cc048 cc070 cc070 cc129
cc070 cc149 cc071 cc078 cc073 cc149 cc070 cc024 cc025
cc070 cc070 cc070 cc097 cc070 cc070 cc070 cc027 cc048
cc070 cc083 cc071 cc053 cc062
cc077 cc149 cc070 cc070 cc072 cc027 cc048 cc071 cc070
cc063 cc028 cc074 cc070 cc070 cc070
cc096 cc070 cc071 cc075 cc072 cc070
cc076 cc070 cc098 cc024 cc025
cc070 cc071 cc070 cc077 cc070 cc043 cc045
cc149 cc070 cc128 cc070 cc070 cc071 cc073 cc070 cc149
cc070 cc076 cc074 cc070 cc024 cc025 cc070 cc073 cc071
cc055 cc041 cc070 cc070 cc070
cc072 cc085 cc070 cc070 cc073 cc080 cc070 cc070 cc071
cc071 cc071 cc053 cc062 cc070 cc070
cc070 cc072 cc070 cc075 cc070 cc053 cc035 cc071 cc070
cc070 cc092 cc024 cc025 cc070 cc070
cc149 cc070 cc053 cc035 cc070 cc074
cc073 cc090 cc070 cc070 cc071 cc071 cc070
cc149 cc149 cc070 cc074 cc070 cc074 cc149 cc076 cc071
cc070 cc070 cc075 cc070 cc070 cc071 cc075 cc071
cc070 cc070 cc080 cc070 cc149 cc071
cc024 cc025 cc071 cc071 cc070 cc070
cc070 cc027 cc048 cc072 cc070 cc070 cc073
cc071 cc070 cc072 cc093 cc149 cc075 cc070
cc105 cc077 cc070 cc073 cc073 cc072 cc070
cc070 cc070 cc071 cc070 cc149 cc070 cc071 cc070 cc149
cc149 cc095 cc070 cc073 cc070 cc071 cc070 cc073
cc149 cc078 cc072 cc071 cc070 cc081 cc079 cc070 cc070
cc072 cc072 cc070 cc149 cc070 cc070
cc123 cc074 cc071 cc053 cc035 cc081
cc070 cc071 cc070 cc070 cc070 cc070
cc043 cc045 cc149 cc071 cc070
cc072 cc086 cc070 cc072 cc149 cc070 cc095
cc071 cc043 cc045 cc149 cc070
cc071 cc027 cc048 cc071 cc075 cc149
cc078 cc073 cc076 cc068 cc061 cc070 cc070 cc076
cc149 cc070 cc149 cc134 cc070 cc070 cc071 cc071
cc074 cc140 cc027 cc048 cc070 cc076 cc072
cc070 cc043 cc045 cc070 cc070 cc072 cc071
cc075 cc086 cc070 cc070 cc070 cc079 cc070 cc072 cc070
cc080 cc070 cc077 cc070 cc070 cc063 cc028 cc086 cc070
cc070 cc071 cc070 cc071 cc070 cc071 cc024 cc025 cc074
cc149 cc070 cc075 cc053 cc062
cc075 cc072 cc024 cc025 cc149 cc072 cc070 cc074 cc070
cc071 cc070 cc095 cc149 cc085 cc070
cc070 cc149 cc072 cc070 cc070 cc075 cc070
cc053 cc062 cc149 cc071 cc070 cc070
cc070 cc149 cc075 cc103 cc076 cc070
cc027 cc048 cc072 cc115 cc070 cc137
cc070 cc070 cc053 cc035 cc070 cc071 cc070 cc070 cc070
cc070 cc073 cc070 cc073 cc073 cc071 cc070 cc070 cc070
cc149 cc070 cc070 cc072 cc070 cc070 cc076
cc071 cc070 cc077 cc070 cc076
cc088 cc071 cc070 cc079 cc053 cc035 cc071
cc108 cc070 cc070 cc070 cc024 cc025 cc077 cc070 cc070
cc149 cc070 cc070 cc043 cc045 cc084 cc070 cc070
cc073 cc053 cc062 cc075 cc086
cc091 cc071 cc053 cc062 cc072 cc092
cc071 cc075 cc074 cc070 cc071
cc094 cc073 cc070 cc105 cc070 cc149 cc076
cc071 cc071 cc072 cc070 cc070 cc072
cc098 cc070 cc070 cc071 cc081 cc024 cc025 cc071
cc070 cc112 cc063 cc028 cc076 cc070
cc071 cc124 cc082 cc070 cc070
cc070 cc063 cc028 cc072 cc073 cc070 cc070 cc149
cc070 cc070 cc070 cc090 cc071 cc070 cc070
cc073 cc072 cc108 cc149 cc075 cc071 cc075
cc070 cc070 cc084 cc074 cc074
cc073 cc080 cc085 cc070 cc081 cc070 cc071 cc122 cc146
cc091 cc070 cc071 cc070 cc070 cc070 cc070 cc073 cc090
cc055 cc041 cc072 cc071 cc072 cc071
cc070 cc149 cc070 cc071 cc087
cc070 cc055 cc041 cc149 cc081 cc070 cc072 cc073
cc070 cc070 cc077 cc076 cc073 cc073 cc072
cc080 cc070 cc072 cc070 cc070
cc071 cc113 cc068 cc061 cc071
cc070 cc076 cc072 cc055 cc041 cc071
cc071 cc149 cc070 cc071 cc070 cc140 cc063 cc028
cc073 cc149 cc053 cc062 cc072 cc070 cc077
cc098 cc070 cc149 cc070 cc070 cc074 cc149 cc114 cc091
cc070 cc024 cc025 cc149 cc077 cc070 cc070 cc071 cc070
cc070 cc149 cc072 cc072 cc070
cc070 cc053 cc035 cc071 cc070
cc072 cc070 cc070 cc070 cc070 cc074 cc073
cc073 cc070 cc073 cc149 cc092 cc119 cc073 cc068 cc061
cc149 cc071 cc071 cc086 cc070 cc072
cc070 cc070 cc080 cc070 cc134 cc070
cc149 cc083 cc070 cc070 cc074 cc053 cc035
cc070 cc094 cc071 cc071 cc070
cc070 cc127 cc070 cc071 cc070 cc070
cc070 cc072 cc071 cc149 cc070 cc070 cc070 cc071 cc099
cc074 cc071 cc063 cc028 cc072 cc071
cc073 cc074 cc071 cc082 cc078 cc070 cc092 cc078 cc070
cc071 cc070 cc073 cc070 cc070 cc070 cc071
cc053 cc062 cc070 cc079 cc071
cc071 cc071 cc070 cc073 cc075
cc071 cc073 cc043 cc045 cc115
cc063 cc028 cc071 cc070 cc092 cc085
cc070 cc074 cc070 cc070 cc133 cc071 cc068 cc061
cc070 cc070 cc070 cc024 cc025
cc082 cc075 cc071 cc070 cc053 cc035 cc078 cc070 cc071
cc070 cc071 cc149 cc070 cc071 cc070 cc071 cc112 cc070
cc053 cc062 cc075 cc072 cc078 cc072 cc070 cc086 cc070
cc070 cc043 cc045 cc070 cc070
cc092 cc070 cc072 cc070 cc070 cc063 cc028
cc070 cc070 cc072 cc074 cc070 cc070 cc070 cc149
cc072 cc149 cc072 cc071 cc071
cc070 cc071 cc070 cc104 cc079 cc053 cc062
cc070 cc070 cc070 cc092 cc079 cc070 cc070
cc070 cc055 cc041 cc080 cc070 cc071 cc070
cc071 cc070 cc076 cc072 cc070 cc072 cc070 cc070 cc076
cc071 cc070 cc081 cc072 cc070 cc070
cc070 cc070 cc070 cc070 cc081 cc070 cc070 cc072
cc072 cc071 cc070 cc073 cc123 cc072 cc070 cc070 cc070
cc070 cc070 cc072 cc073 cc070 cc149 cc068 cc061 cc078
cc100 cc071 cc094 cc070 cc105
cc070 cc070 cc072 cc071 cc070 cc149 cc071 cc070
cc070 cc070 cc070 cc070 cc149
cc070 cc070 cc070 cc077 cc070 cc076 cc070 cc068 cc061
cc072 cc070 cc070 cc072 cc071 cc149 cc068 cc061
cc074 cc080 cc071 cc070 cc070 cc070
cc071 cc070 cc063 cc028 cc072 cc070 cc070 cc070
cc071 cc070 cc116 cc068 cc061 cc071
cc074 cc070 cc072 cc068 cc061 cc072 cc070 cc070
cc070 cc053 cc035 cc072 cc071 cc077 cc070 cc070 cc070
cc097 cc077 cc070 cc071 cc070 cc070 cc076 cc072
cc043 cc045 cc072 cc149 cc070
cc070 cc071 cc070 cc075 cc070 cc070 cc149 cc070
cc077 cc082 cc070 cc099 cc070 cc096 cc063 cc028
cc071 cc070 cc083 cc070 cc070 cc024 cc025 cc070 cc070
cc070 cc085 cc075 cc098 cc070
cc071 cc053 cc062 cc071 cc070
cc072 cc072 cc149 cc079 cc070 cc070 cc073 cc070 cc085
cc071 cc075 cc070 cc073 cc070
cc070 cc072 cc071 cc070 cc070 cc070 cc071 cc074 cc074
cc070 cc149 cc072 cc070 cc149 cc070 cc070 cc053 cc035
cc070 cc070 cc070 cc149 cc070 cc070 cc149 cc070 cc149
cc149 cc070 cc076 cc099 cc088 cc070 cc071 cc070
cc077 cc071 cc149 cc070 cc070 cc072
cc055 cc041 cc070 cc070 cc070 cc073 cc097
cc076 cc053 cc035 cc070 cc070 cc104 cc070 cc070
cc084 cc070 cc070 cc070 cc070 cc086 cc084
cc070 cc133 cc070 cc043 cc045 cc070 cc070
cc076 cc072 cc053 cc062 cc070 cc072 cc070
cc070 cc080 cc070 cc092 cc081 cc115
cc074 cc071 cc072 cc070 cc053 cc035 cc070 cc075
cc071 cc076 cc070 cc053 cc062
cc071 cc071 cc070 cc072 cc070 cc071 cc063 cc028 cc073
cc070 cc071 cc071 cc024 cc025 cc073 cc070 cc083
cc053 cc062 cc073 cc075 cc070
cc080 cc073 cc076 cc076 cc071 cc070
cc070 cc071 cc070 cc074 cc123
cc070 cc072 cc071 cc087 cc070 cc071 cc070 cc075 cc070
cc072 cc072 cc071 cc074 cc024 cc025 cc072 cc149 cc077
cc083 cc076 cc085 cc078 cc075 cc070
cc072 cc090 cc070 cc070 cc070 cc073 cc076 cc070 cc070
cc070 cc070 cc070 cc070 cc071 cc070 cc073 cc072 cc149
cc070 cc070 cc071 cc077 cc072 cc071 cc070 cc112
cc063 cc028 cc070 cc076 cc070
cc053 cc062 cc117 cc149 cc070 cc070 cc070
cc090 cc070 cc109 cc082 cc149 cc053 cc035 cc070
cc070 cc071 cc089 cc072 cc080 cc149 cc089 cc070 cc085
cc079 cc070 cc055 cc041 cc073 cc149 cc074 cc149 cc072
cc072 cc072 cc070 cc079 cc068 cc061
cc070 cc070 cc086 cc076 cc072 cc070 cc072 cc070
cc072 cc107 cc080 cc084 cc083 cc091 cc070 cc070
cc073 cc083 cc070 cc071 cc071
cc068 cc061 cc080 cc077 cc079
cc070 cc070 cc071 cc071 cc071 cc072 cc070
cc070 cc071 cc074 cc070 cc070
cc070 cc090 cc053 cc062 cc087 cc071 cc092 cc070
cc073 cc070 cc070 cc086 cc072 cc070 cc070 cc053 cc062
cc070 cc070 cc118 cc070 cc070
cc070 cc070 cc070 cc070 cc070
cc088 cc070 cc055 cc041 cc077
cc082 cc131 cc043 cc045 cc071 cc149 cc070
cc078 cc071 cc072 cc080 cc070 cc071 cc070
cc099 cc024 cc025 cc074 cc070
cc071 cc071 cc071 cc074 cc074 cc070 cc080 cc073
cc073 cc070 cc080 cc071 cc071 cc071 cc071 cc074
cc070 cc070 cc070 cc053 cc062 cc071 cc149
cc070 cc070 cc070 cc125 cc070 cc071 cc076
cc072 cc140 cc070 cc073 cc071
cc090 cc087 cc070 cc074 cc071 cc073 cc081
cc089 cc070 cc077 cc078 cc071 cc071 cc070 cc071 cc070
cc073 cc072 cc070 cc043 cc045
cc070 cc024 cc025 cc070 cc124
cc071 cc070 cc073 cc070 cc076 cc070 cc053 cc035
cc071 cc113 cc070 cc083 cc075 cc073 cc071 cc070
cc149 cc071 cc070 cc053 cc062 cc070 cc071
cc076 cc149 cc078 cc070 cc068 cc061 cc070
cc053 cc035 cc071 cc070 cc070 cc072
cc073 cc043 cc045 cc073 cc070 cc140 cc070
cc070 cc070 cc085 cc072 cc072 cc073 cc070
cc072 cc070 cc070 cc071 cc072 cc070 cc071 cc072
cc071 cc070 cc075 cc053 cc035 cc071 cc070 cc076 cc070
cc070 cc070 cc071 cc071 cc073 cc070
cc070 cc071 cc074 cc068 cc061
cc126 cc083 cc081 cc070 cc149 cc076 cc072 cc070 cc070
cc063 cc028 cc070 cc070 cc070 cc070 cc073 cc070
cc073 cc085 cc070 cc068 cc061 cc081
cc071 cc071 cc070 cc071 cc072 cc071 cc071
cc101 cc070 cc043 cc045 cc072 cc101 cc149 cc070 cc071
cc070 cc070 cc070 cc070 cc070 cc071 cc087
