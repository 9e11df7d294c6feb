cc070 cc073 cc101 cc115 cc070 cc073
cc070 cc074 cc072 cc072 cc073 cc070 cc070 cc129 cc070
cc074 cc071 cc094 cc127 cc122 cc100
cc071 cc053 cc035 cc070 cc071 cc070 cc078 cc079
cc070 cc139 cc126 cc114 cc070 cc077 cc070 cc074 cc070
cc070 cc070 cc070 cc070 cc070
cc070 cc070 cc071 cc081 cc073 cc076 cc070 cc122
cc070 cc071 cc070 cc101 cc118 cc074 cc070
cc099 cc074 cc070 cc074 cc074 cc070 cc072 cc134 cc070
cc071 cc071 cc076 cc072 cc149 cc070 cc070
cc070 cc070 cc071 cc070 cc149 cc074 cc070
cc070 cc070 cc072 cc070 cc070
cc079 cc070 cc134 cc137 cc120
cc070 cc070 cc127 cc122 cc100 cc070
cc076 cc071 cc071 cc072 cc070
cc125 cc107 cc100 cc077 cc070
cc070 cc115 cc070 cc134 cc137 cc120
cc071 cc101 cc115 cc070 cc070 cc071 cc070 cc071 cc071
cc076 cc070 cc072 cc075 cc101 cc115 cc070
cc071 cc071 cc074 cc071 cc074 cc070 cc070 cc070
cc085 cc071 cc070 cc070 cc070
cc070 cc072 cc079 cc070 cc070
cc070 cc149 cc070 cc084 cc139 cc126 cc114 cc074
cc070 cc070 cc070 cc124 cc116 cc074 cc071 cc149 cc095
cc070 cc072 cc070 cc098 cc075 cc070 cc070 cc070
cc070 cc089 cc070 cc080 cc076
cc070 cc070 cc134 cc137 cc120
cc072 cc070 cc078 cc070 cc149 cc070 cc078
cc070 cc073 cc134 cc137 cc120 cc070
cc149 cc071 cc070 cc070 cc070 cc139 cc126 cc114 cc070
cc071 cc149 cc077 cc070 cc070 cc070 cc103 cc137
cc070 cc027 cc048 cc071 cc070
cc071 cc102 cc118 cc138 cc070 cc071
cc070 cc072 cc124 cc116 cc071 cc070 cc073 cc070
cc070 cc071 cc070 cc073 cc070 cc076 cc071
cc070 cc134 cc137 cc120 cc071
cc088 cc093 cc070 cc070 cc070 cc070 cc070
cc077 cc070 cc074 cc070 cc070 cc071 cc149
cc075 cc071 cc071 cc070 cc072
cc070 cc071 cc070 cc027 cc048
cc070 cc101 cc115 cc071 cc070 cc071 cc149 cc071 cc070
cc070 cc070 cc070 cc076 cc072
cc077 cc072 cc076 cc072 cc070 cc070
cc149 cc071 cc071 cc071 cc070
cc135 cc117 cc138 cc070 cc070 cc072 cc070
cc076 cc117 cc070 cc071 cc070 cc072 cc070 cc071
cc071 cc070 cc085 cc083 cc071
cc149 cc124 cc116 cc071 cc149 cc070 cc092
cc071 cc053 cc035 cc070 cc072 cc072
cc070 cc072 cc091 cc074 cc070 cc070 cc070 cc070 cc070
cc070 cc070 cc071 cc074 cc073 cc070 cc071
cc072 cc088 cc097 cc070 cc074 cc104 cc124 cc114 cc090
cc071 cc071 cc124 cc071 cc070 cc134 cc137 cc120
cc070 cc073 cc104 cc070 cc070 cc103 cc080 cc071
cc149 cc070 cc070 cc081 cc085 cc074 cc070
cc027 cc048 cc070 cc071 cc070 cc070
cc070 cc071 cc074 cc081 cc070 cc070 cc071 cc071
cc101 cc115 cc070 cc071 cc070 cc072 cc070 cc070
cc070 cc077 cc101 cc115 cc120 cc091 cc149 cc073
cc071 cc102 cc118 cc138 cc073 cc104 cc070
cc078 cc070 cc070 cc070 cc149
cc027 cc048 cc070 cc072 cc070
cc124 cc116 cc070 cc070 cc070
cc073 cc070 cc108 cc122 cc071
cc070 cc072 cc106 cc070 cc071 cc074 cc071 cc070 cc070
cc101 cc118 cc093 cc071 cc149 cc070
cc071 cc070 cc053 cc062 cc071 cc070 cc070 cc070
cc070 cc070 cc079 cc149 cc076 cc070 cc149
cc079 cc070 cc071 cc070 cc070 cc075
cc090 cc072 cc125 cc070 cc075 cc070 cc077
cc070 cc084 cc070 cc070 cc070 cc072 cc080
cc073 cc077 cc079 cc070 cc071 cc149 cc070
cc076 cc070 cc145 cc071 cc070 cc070 cc070 cc091 cc070
cc070 cc070 cc149 cc070 cc072 cc088 cc072 cc071
cc081 cc081 cc070 cc070 cc070 cc070 cc070 cc071 cc070
cc121 cc104 cc125 cc149 cc074 cc074 cc077
cc053 cc035 cc073 cc070 cc149 cc070
cc072 cc139 cc126 cc114 cc070 cc070 cc070 cc149
cc121 cc104 cc125 cc072 cc074 cc071
cc070 cc070 cc070 cc122 cc070 cc070 cc084
cc070 cc071 cc073 cc071 cc070 cc079 cc070 cc070
cc100 cc070 cc070 cc071 cc070 cc073
cc073 cc070 cc070 cc070 cc070 cc070 cc075
cc070 cc070 cc071 cc072 cc130 cc110 cc071 cc105 cc070
cc104 cc076 cc116 cc135 cc134 cc070 cc070 cc070 cc114
cc070 cc027 cc048 cc082 cc070
cc070 cc073 cc071 cc072 cc073 cc070 cc081
cc071 cc070 cc070 cc070 cc097 cc070 cc107
cc070 cc079 cc079 cc071 cc134 cc137 cc120 cc073 cc070
cc070 cc072 cc070 cc075 cc070 cc074
cc077 cc073 cc070 cc071 cc070 cc073 cc099 cc072
cc076 cc070 cc070 cc103 cc079 cc070 cc089 cc075
cc103 cc137 cc071 cc143 cc070
cc072 cc101 cc115 cc070 cc072 cc070
cc070 cc071 cc070 cc070 cc070 cc070 cc086 cc070
cc070 cc071 cc072 cc072 cc082
cc071 cc070 cc072 cc070 cc070 cc070 cc083 cc104
cc070 cc071 cc070 cc070 cc071 cc070
cc135 cc117 cc138 cc074 cc110
cc070 cc070 cc070 cc070 cc070 cc074
cc084 cc070 cc099 cc070 cc076 cc133 cc071
cc070 cc070 cc070 cc072 cc070 cc071
cc074 cc070 cc076 cc070 cc100 cc076
cc127 cc106 cc070 cc072 cc070 cc072 cc070 cc079 cc108
cc074 cc070 cc070 cc073 cc070 cc070
cc079 cc080 cc139 cc126 cc114 cc073
cc070 cc076 cc071 cc053 cc062
cc070 cc071 cc071 cc070 cc078 cc071 cc071 cc071
cc072 cc074 cc070 cc149 cc071
cc070 cc073 cc118 cc070 cc070 cc072 cc077 cc070
cc071 cc076 cc070 cc072 cc071 cc071 cc071 cc070
cc070 cc070 cc070 cc070 cc070 cc070 cc070
cc070 cc070 cc121 cc104 cc125 cc071 cc071 cc070 cc071
cc070 cc070 cc075 cc070 cc070 cc071 cc070 cc077 cc079
cc149 cc149 cc070 cc125 cc107 cc100 cc070 cc070
cc071 cc070 cc070 cc139 cc126 cc114 cc074
cc071 cc101 cc118 cc078 cc070 cc078 cc070 cc071 cc078
cc070 cc070 cc070 cc070 cc072
cc070 cc083 cc070 cc073 cc070 cc070 cc134 cc137 cc120
cc074 cc075 cc116 cc135 cc134
cc070 cc075 cc070 cc070 cc091
cc071 cc071 cc070 cc149 cc071 cc071 cc070 cc074 cc149
cc070 cc070 cc116 cc135 cc134
cc078 cc072 cc072 cc080 cc070 cc078
cc071 cc071 cc070 cc070 cc101 cc115
cc149 cc072 cc070 cc104 cc053 cc062
cc139 cc126 cc114 cc070 cc070 cc070
cc070 cc070 cc070 cc071 cc053 cc062
cc053 cc035 cc070 cc072 cc070 cc073 cc071 cc071
cc070 cc134 cc137 cc120 cc070
cc130 cc110 cc073 cc073 cc070 cc082
cc070 cc070 cc070 cc070 cc070 cc070 cc071 cc075
cc070 cc074 cc096 cc085 cc121 cc104 cc125 cc070
cc072 cc053 cc062 cc084 cc070 cc080 cc071 cc094
cc070 cc070 cc070 cc149 cc071 cc072 cc086 cc071 cc070
cc070 cc070 cc073 cc086 cc070 cc070
cc078 cc070 cc078 cc091 cc072 cc070 cc073 cc070 cc074
cc077 cc101 cc115 cc070 cc070 cc070 cc070 cc072 cc142
cc149 cc075 cc070 cc130 cc110 cc071
cc070 cc084 cc093 cc149 cc103 cc137
cc070 cc070 cc078 cc076 cc070
cc082 cc024 cc025 cc070 cc072 cc072 cc071 cc070 cc079
cc070 cc070 cc096 cc071 cc070 cc070
cc070 cc076 cc071 cc129 cc072 cc070 cc070 cc070 cc070
cc072 cc070 cc074 cc073 cc072 cc071 cc070
cc070 cc070 cc068 cc061 cc071 cc070 cc071 cc070
cc070 cc070 cc070 cc073 cc053 cc035 cc071
cc070 cc070 cc070 cc070 cc075 cc071 cc070 cc094 cc074
cc075 cc070 cc072 cc078 cc070 cc072 cc072 cc105
cc070 cc071 cc070 cc070 cc072 cc074
cc070 cc070 cc070 cc070 cc072 cc074
cc071 cc070 cc077 cc072 cc071 cc079 cc071 cc071 cc078
cc070 cc072 cc070 cc075 cc055 cc041
cc072 cc070 cc071 cc071 cc070 cc149 cc070 cc072 cc079
cc070 cc088 cc071 cc063 cc028
cc070 cc070 cc084 cc070 cc072
cc071 cc070 cc076 cc043 cc045 cc070 cc072 cc070 cc071
cc070 cc071 cc080 cc140 cc070 cc070 cc071 cc145
cc055 cc041 cc070 cc070 cc070 cc078
cc082 cc070 cc071 cc082 cc074 cc080 cc097 cc083
cc027 cc048 cc070 cc071 cc070 cc087
cc130 cc070 cc070 cc070 cc073 cc073 cc076 cc086 cc149
cc070 cc074 cc073 cc070 cc076 cc070 cc070 cc070 cc072
cc085 cc070 cc070 cc070 cc070 cc071 cc071 cc072
cc070 cc070 cc098 cc053 cc062 cc071 cc070 cc070
cc073 cc055 cc041 cc070 cc071 cc070
cc149 cc074 cc043 cc045 cc070 cc072 cc070 cc075 cc072
cc070 cc116 cc071 cc087 cc070 cc075
cc073 cc070 cc070 cc100 cc149 cc070 cc082
cc076 cc070 cc070 cc071 cc073 cc070
cc078 cc072 cc089 cc070 cc070
cc070 cc071 cc071 cc070 cc149 cc070 cc053 cc035
cc077 cc070 cc074 cc070 cc072 cc070 cc071
cc070 cc024 cc025 cc070 cc070 cc070 cc096 cc070 cc070
cc070 cc070 cc070 cc074 cc070 cc068 cc061 cc088 cc077
cc075 cc097 cc070 cc055 cc041 cc079 cc072
cc071 cc081 cc076 cc070 cc024 cc025
cc073 cc083 cc071 cc053 cc062
cc027 cc048 cc122 cc073 cc071
cc073 cc099 cc071 cc070 cc080 cc063 cc028 cc080
cc107 cc071 cc072 cc070 cc074 cc070 cc096 cc077
cc132 cc070 cc070 cc070 cc070
cc075 cc053 cc035 cc070 cc078 cc088 cc070 cc107 cc073
cc072 cc070 cc079 cc072 cc072 cc070
cc070 cc070 cc024 cc025 cc071
cc097 cc072 cc070 cc072 cc070
cc070 cc070 cc070 cc073 cc024 cc025 cc071
cc070 cc076 cc027 cc048 cc073 cc070 cc072 cc070
cc149 cc071 cc070 cc070 cc107 cc104 cc070 cc085
cc070 cc055 cc041 cc073 cc071
cc095 cc070 cc070 cc074 cc149 cc070
cc079 cc098 cc070 cc071 cc070 cc076 cc070 cc070
cc070 cc070 cc075 cc076 cc070 cc070 cc070 cc070 cc072
cc079 cc070 cc070 cc063 cc028 cc073 cc070 cc075 cc149
cc070 cc078 cc071 cc053 cc035
cc079 cc070 cc071 cc070 cc070 cc071 cc068 cc061
cc070 cc071 cc070 cc070 cc070 cc086
cc071 cc070 cc070 cc071 cc070 cc070
cc070 cc071 cc070 cc085 cc145 cc075 cc077 cc082 cc077
cc149 cc076 cc043 cc045 cc149 cc075
cc070 cc053 cc035 cc149 cc149 cc070 cc071 cc070 cc077
cc080 cc073 cc071 cc070 cc070
cc070 cc091 cc099 cc071 cc072 cc149 cc070 cc073
cc072 cc131 cc070 cc074 cc070 cc068 cc061 cc070 cc071
cc070 cc070 cc071 cc072 cc149 cc119 cc073
cc070 cc070 cc149 cc072 cc078 cc077 cc113 cc070 cc070
cc077 cc070 cc070 cc070 cc076 cc072
cc070 cc081 cc070 cc070 cc073 cc092
cc095 cc070 cc070 cc070 cc073 cc149 cc063 cc028 cc070
cc073 cc070 cc070 cc070 cc070
cc149 cc055 cc041 cc070 cc071 cc071 cc072
cc072 cc077 cc024 cc025 cc071 cc070
cc070 cc070 cc080 cc070 cc070 cc072
cc070 cc071 cc070 cc149 cc076 cc071 cc070
cc070 cc072 cc070 cc068 cc061
cc072 cc071 cc053 cc062 cc073 cc075 cc149 cc070 cc071
cc074 cc055 cc041 cc149 cc070 cc076 cc070 cc070
cc072 cc074 cc070 cc071 cc070 cc090 cc072 cc149
cc073 cc063 cc028 cc084 cc071
cc080 cc027 cc048 cc070 cc070
cc072 cc108 cc024 cc025 cc071 cc074
cc149 cc088 cc071 cc100 cc086 cc070
cc071 cc063 cc028 cc070 cc070 cc070 cc070 cc070
cc075 cc071 cc055 cc041 cc070 cc070 cc084
cc073 cc071 cc071 cc071 cc070 cc070 cc070 cc053 cc062
cc074 cc070 cc071 cc073 cc070 cc078 cc070 cc043 cc045
cc089 cc070 cc072 cc070 cc071 cc149 cc097
cc070 cc070 cc070 cc071 cc070 cc068 cc061
cc027 cc048 cc112 cc149 cc149 cc070
cc099 cc077 cc055 cc041 cc070 cc070
cc070 cc070 cc070 cc063 cc028 cc070
cc070 cc070 cc070 cc080 cc073 cc071
cc070 cc070 cc070 cc080 cc070 cc073 cc070 cc071
cc070 cc070 cc072 cc024 cc025 cc077 cc071
cc072 cc070 cc071 cc074 cc083
cc027 cc048 cc070 cc070 cc070 cc096 cc070 cc072 cc071
cc070 cc070 cc070 cc149 cc070
cc088 cc063 cc028 cc070 cc070 cc070 cc072 cc072
cc070 cc087 cc107 cc081 cc078 cc077
cc070 cc080 cc129 cc072 cc070 cc070 cc079 cc074
cc073 cc070 cc070 cc024 cc025 cc070 cc070 cc070 cc070
cc053 cc035 cc070 cc071 cc077 cc070
cc063 cc028 cc070 cc086 cc149 cc070 cc070 cc070
cc071 cc071 cc053 cc035 cc070 cc110 cc070
cc079 cc070 cc071 cc070 cc075 cc071
cc070 cc072 cc071 cc070 cc055 cc041 cc101 cc072
cc024 cc025 cc070 cc071 cc070
cc070 cc070 cc070 cc063 cc028 cc070 cc080
cc070 cc070 cc072 cc149 cc070 cc077 cc071 cc071 cc070
cc070 cc149 cc070 cc149 cc070 cc072 cc070
cc070 cc071 cc053 cc062 cc070 cc079
cc072 cc027 cc048 cc149 cc074
cc070 cc070 cc071 cc149 cc072
cc071 cc076 cc149 cc082 cc072 cc071 cc068 cc061
cc024 cc025 cc070 cc073 cc149 cc070 cc071 cc070
cc070 cc075 cc078 cc068 cc061
cc070 cc070 cc070 cc070 cc078 cc053 cc062
cc093 cc086 cc027 cc048 cc070 cc070 cc080 cc149 cc070
cc070 cc070 cc099 cc063 cc028 cc099 cc071
cc071 cc070 cc024 cc025 cc075 cc070 cc070 cc149 cc070
cc070 cc072 cc074 cc149 cc072 cc071 cc070
cc074 cc071 cc024 cc025 cc073 cc070
cc149 cc070 cc070 cc027 cc048 cc070
cc081 cc079 cc070 cc073 cc068 cc061 cc076
cc070 cc072 cc149 cc071 cc070 cc070
cc071 cc070 cc072 cc071 cc070 cc070 cc043 cc045 cc072
cc070 cc079 cc077 cc070 cc070 cc071 cc071 cc053 cc035
cc072 cc070 cc098 cc070 cc070 cc071 cc080 cc076 cc070
cc070 cc070 cc070 cc074 cc079 cc043 cc045 cc071
cc070 cc071 cc070 cc073 cc073 cc090 cc149 cc072
cc149 cc070 cc070 cc070 cc070
cc024 cc025 cc072 cc072 cc079 cc071 cc070 cc074 cc070
cc084 cc070 cc099 cc053 cc062
cc073 cc080 cc070 cc070 cc149 cc078 cc079
cc088 cc070 cc079 cc085 cc070 cc070 cc078 cc070
cc070 cc071 cc074 cc078 cc072 cc070 cc074 cc071
cc136 cc149 cc070 cc070 cc070 cc081 cc027 cc048 cc070
cc070 cc085 cc070 cc070 cc074 cc104 cc070 cc055 cc041
cc088 cc078 cc070 cc024 cc025 cc070 cc072 cc070 cc071
cc070 cc075 cc074 cc070 cc074 cc073
