hh070 hh072 hh070 hh077 hh072 hh070 hh070 hh074
hh070 hh071 hh070 hh070 hh073 hh071 hh070
hh072 hh034 hh037 hh060 hh073 hh070 hh070 hh072
hh070 hh070 hh070 hh070 hh128 hh121
hh070 hh070 hh115 hh101 hh071
hh103 hh105 hh073 hh071 hh071 hh073 hh075 hh070 hh070
hh149 hh070 hh073 hh070 hh070 hh070
hh071 hh128 hh121 hh070 hh083 hh070 hh071 hh070 hh092
hh070 hh083 hh070 hh072 hh070 hh074 hh071 hh077
hh070 hh070 hh070 hh070 hh070 hh070
hh074 hh073 hh076 hh079 hh070 hh070 hh073 hh070 hh070
hh070 hh071 hh070 hh070 hh113 hh135 hh070 hh072 hh071
hh103 hh105 hh072 hh072 hh070 hh070 hh071
hh070 hh070 hh075 hh149 hh073 hh065 hh047 hh040
hh035 hh057 hh038 hh070 hh072 hh149 hh072
hh070 hh070 hh074 hh077 hh070 hh079
hh070 hh053 hh062 hh070 hh076 hh071 hh073
hh070 hh071 hh070 hh070 hh070 hh081 hh072 hh070 hh071
hh070 hh072 hh061 hh044 hh065 hh070
hh065 hh047 hh040 hh070 hh070 hh070 hh079 hh070 hh149
hh070 hh124 hh125 hh070 hh070 hh070 hh149 hh074 hh075
hh085 hh070 hh070 hh070 hh071 hh070 hh071 hh073
hh128 hh121 hh073 hh112 hh125 hh070
hh070 hh104 hh070 hh070 hh071
hh133 hh070 hh072 hh071 hh072 hh149 hh071 hh070 hh088
hh070 hh071 hh070 hh070 hh070 hh149
hh149 hh070 hh070 hh030 hh050 hh070 hh070 hh072
hh070 hh076 hh144 hh070 hh115 hh101 hh070 hh149 hh122
hh070 hh071 hh030 hh050 hh080 hh075 hh086 hh073
hh070 hh070 hh073 hh035 hh057 hh038 hh070 hh087
hh070 hh073 hh073 hh070 hh071 hh070
hh070 hh070 hh075 hh070 hh076 hh071 hh096
hh078 hh072 hh070 hh070 hh073 hh070 hh073 hh074
hh076 hh070 hh075 hh071 hh071 hh070 hh076
hh070 hh075 hh070 hh070 hh081
hh149 hh070 hh073 hh071 hh070 hh071 hh070
hh149 hh070 hh070 hh071 hh070 hh070 hh099 hh073
hh070 hh061 hh044 hh065 hh070 hh070
hh139 hh124 hh125 hh070 hh075 hh075 hh072 hh075
hh070 hh070 hh070 hh080 hh090 hh070 hh070
hh074 hh079 hh073 hh070 hh073 hh070 hh070 hh070 hh123
hh043 hh037 hh070 hh072 hh071
hh075 hh073 hh070 hh149 hh070 hh076 hh070 hh078
hh070 hh072 hh077 hh071 hh071
hh070 hh071 hh070 hh074 hh074 hh149 hh070 hh070 hh074
hh070 hh073 hh070 hh073 hh075 hh115 hh101
hh070 hh070 hh071 hh070 hh070 hh070
hh072 hh097 hh070 hh073 hh070 hh077 hh072 hh071 hh087
hh070 hh082 hh070 hh115 hh101 hh070 hh072 hh071
hh072 hh070 hh070 hh027 hh048 hh070 hh071 hh123 hh073
hh043 hh037 hh072 hh074 hh149 hh071
hh070 hh034 hh037 hh060 hh070
hh070 hh117 hh076 hh072 hh119 hh075 hh073
hh073 hh071 hh071 hh070 hh070 hh071 hh070 hh070
hh128 hh121 hh070 hh070 hh070 hh071 hh071
hh149 hh070 hh085 hh070 hh072
hh072 hh070 hh070 hh035 hh057 hh038
hh076 hh072 hh035 hh057 hh038 hh073 hh149 hh070
hh072 hh149 hh077 hh149 hh072 hh070
hh070 hh149 hh071 hh073 hh070 hh071 hh071 hh073 hh070
hh071 hh065 hh047 hh040 hh149
hh070 hh072 hh073 hh071 hh070
hh074 hh124 hh125 hh070 hh078 hh071 hh070 hh076
hh070 hh070 hh113 hh135 hh097
hh073 hh074 hh070 hh070 hh070
hh108 hh070 hh070 hh070 hh115 hh101
hh071 hh070 hh113 hh135 hh070
hh149 hh030 hh050 hh094 hh071
hh076 hh070 hh123 hh128 hh079 hh070
hh070 hh070 hh070 hh073 hh070 hh061 hh044 hh065
hh080 hh071 hh070 hh076 hh075 hh149 hh072 hh070
hh070 hh112 hh073 hh070 hh084
hh070 hh149 hh070 hh074 hh070 hh070
hh071 hh128 hh121 hh107 hh071 hh071
hh128 hh121 hh075 hh071 hh072
hh112 hh071 hh070 hh073 hh070 hh070 hh074 hh072
hh072 hh090 hh073 hh070 hh077 hh070
hh070 hh072 hh090 hh076 hh070 hh070 hh112 hh070
hh070 hh070 hh070 hh076 hh070 hh074 hh149
hh070 hh070 hh070 hh071 hh043 hh037 hh070 hh072
hh071 hh070 hh070 hh071 hh070 hh071 hh070 hh149 hh070
hh070 hh074 hh075 hh070 hh035 hh057 hh038 hh070 hh070
hh072 hh073 hh149 hh123 hh128 hh071 hh071 hh070 hh070
hh071 hh086 hh070 hh071 hh071 hh075
hh107 hh042 hh058 hh038 hh149 hh071 hh075
hh034 hh037 hh060 hh070 hh071
hh094 hh128 hh121 hh070 hh086 hh119 hh149
hh071 hh070 hh070 hh071 hh070 hh070 hh070 hh110
hh113 hh135 hh071 hh082 hh081 hh079
hh071 hh070 hh072 hh073 hh070 hh071 hh149
hh072 hh070 hh078 hh104 hh071 hh070 hh070 hh070 hh070
hh149 hh074 hh070 hh070 hh088 hh072 hh113 hh135 hh094
hh092 hh071 hh070 hh030 hh050 hh072 hh070 hh084
hh072 hh072 hh073 hh070 hh071 hh128 hh121
hh027 hh048 hh070 hh070 hh070 hh073 hh070 hh075 hh070
hh070 hh070 hh070 hh070 hh034 hh037 hh060
hh070 hh070 hh070 hh141 hh070 hh076 hh072 hh129 hh072
hh087 hh070 hh070 hh070 hh102
hh070 hh070 hh071 hh070 hh070
hh070 hh076 hh102 hh070 hh070 hh087 hh106
hh077 hh082 hh070 hh070 hh053 hh062
hh072 hh081 hh072 hh024 hh054
hh070 hh070 hh071 hh072 hh072 hh074 hh074 hh119
hh126 hh071 hh070 hh072 hh071 hh070 hh073
hh072 hh071 hh073 hh096 hh103 hh105 hh073 hh078
hh084 hh043 hh037 hh070 hh070
hh149 hh070 hh070 hh070 hh070
hh070 hh079 hh072 hh110 hh071 hh043 hh037
hh073 hh071 hh079 hh071 hh070
hh078 hh070 hh072 hh149 hh070
hh099 hh070 hh070 hh084 hh072 hh070 hh074
hh075 hh070 hh070 hh071 hh070 hh072
hh070 hh149 hh072 hh076 hh070 hh070 hh070 hh070
hh079 hh089 hh080 hh149 hh070 hh102
hh149 hh088 hh042 hh058 hh038
hh071 hh070 hh076 hh070 hh078 hh070 hh070 hh093 hh070
hh070 hh070 hh071 hh065 hh047 hh040 hh071
hh070 hh070 hh071 hh070 hh070
hh071 hh080 hh070 hh073 hh070 hh070 hh070 hh071 hh071
hh027 hh048 hh091 hh070 hh096
hh071 hh042 hh058 hh038 hh105 hh084
hh071 hh149 hh128 hh121 hh074 hh070 hh149 hh070
hh070 hh074 hh071 hh070 hh115 hh101
hh027 hh048 hh071 hh070 hh070 hh070
hh074 hh070 hh070 hh070 hh076 hh070 hh065 hh047 hh040
hh070 hh070 hh081 hh072 hh075 hh071 hh072 hh070 hh149
hh070 hh110 hh071 hh082 hh072 hh072
hh079 hh070 hh070 hh081 hh070 hh086 hh070 hh070 hh149
hh079 hh113 hh135 hh070 hh077 hh070 hh149
hh070 hh072 hh149 hh070 hh070 hh070 hh070 hh070 hh071
hh070 hh070 hh071 hh077 hh070 hh073 hh072 hh070 hh070
hh070 hh030 hh050 hh070 hh073 hh089 hh099 hh149
hh070 hh100 hh034 hh037 hh060 hh086 hh070
hh107 hh030 hh050 hh070 hh080 hh075 hh070
hh124 hh125 hh070 hh070 hh072 hh082 hh077
hh070 hh071 hh070 hh116 hh073 hh070 hh070 hh070 hh070
hh070 hh070 hh071 hh070 hh074 hh089 hh070 hh076
hh070 hh071 hh070 hh070 hh075 hh070 hh077 hh149
hh070 hh082 hh070 hh071 hh071 hh103 hh105 hh077 hh071
hh070 hh072 hh072 hh149 hh079 hh074 hh077 hh070
hh072 hh071 hh073 hh070 hh071 hh070
hh099 hh071 hh118 hh070 hh149 hh070 hh075
hh095 hh075 hh070 hh082 hh070 hh073
hh149 hh071 hh070 hh072 hh070 hh149
hh070 hh081 hh070 hh041 hh058 hh071 hh071 hh070
hh071 hh070 hh071 hh070 hh076 hh073 hh070
hh073 hh070 hh070 hh071 hh072 hh070 hh070
hh070 hh070 hh070 hh071 hh100 hh149 hh070
hh070 hh086 hh149 hh048 hh062
hh070 hh072 hh071 hh076 hh073 hh149 hh070 hh071
hh093 hh088 hh070 hh070 hh074 hh024 hh054
hh070 hh071 hh043 hh037 hh070 hh084 hh091
hh030 hh050 hh070 hh070 hh071
hh078 hh071 hh070 hh103 hh096 hh070
hh064 hh056 hh070 hh137 hh070
hh071 hh071 hh070 hh070 hh104 hh070 hh070 hh070
hh070 hh071 hh082 hh070 hh070 hh089 hh071
hh072 hh034 hh037 hh060 hh070 hh070 hh071
hh072 hh070 hh027 hh062 hh040
hh070 hh071 hh070 hh061 hh044 hh065 hh149 hh070
hh076 hh070 hh041 hh055 hh081
hh070 hh070 hh070 hh071 hh070 hh072 hh070
hh070 hh073 hh070 hh071 hh071 hh070 hh070 hh071
hh072 hh070 hh070 hh070 hh070 hh071
hh073 hh071 hh073 hh070 hh070 hh085 hh149 hh070 hh074
hh039 hh026 hh054 hh136 hh071 hh080 hh149 hh070 hh072
hh070 hh070 hh070 hh072 hh024 hh054 hh070 hh070
hh070 hh027 hh062 hh040 hh070 hh071
hh077 hh070 hh149 hh070 hh079 hh070 hh070 hh075 hh071
hh070 hh106 hh073 hh027 hh062 hh040 hh070 hh070 hh070
hh072 hh070 hh070 hh070 hh070
hh071 hh073 hh043 hh037 hh070
hh070 hh071 hh070 hh070 hh073 hh070 hh072 hh107
hh071 hh070 hh072 hh070 hh082 hh077
hh070 hh072 hh070 hh071 hh085 hh070
hh071 hh149 hh070 hh149 hh072 hh149 hh074 hh070
hh070 hh072 hh099 hh070 hh071 hh070 hh090
hh041 hh058 hh072 hh070 hh070
hh070 hh149 hh075 hh071 hh078 hh070 hh072
hh126 hh073 hh070 hh070 hh071 hh056 hh035 hh034
hh071 hh128 hh071 hh071 hh072 hh070 hh070 hh064 hh056
hh149 hh072 hh070 hh071 hh070
hh076 hh078 hh039 hh026 hh054 hh070
hh075 hh075 hh073 hh070 hh070 hh077 hh071
hh070 hh071 hh041 hh055 hh070 hh071 hh076
hh073 hh149 hh073 hh070 hh039 hh026 hh054
hh070 hh034 hh037 hh060 hh135 hh073 hh070 hh073
hh072 hh071 hh070 hh070 hh071 hh070 hh073 hh070 hh070
hh116 hh079 hh070 hh070 hh070 hh072 hh070
hh077 hh071 hh071 hh098 hh099 hh071 hh072
hh070 hh070 hh070 hh071 hh149 hh072
hh071 hh070 hh061 hh044 hh065 hh116
hh041 hh055 hh070 hh070 hh084
hh070 hh070 hh071 hh072 hh070 hh074
hh071 hh070 hh041 hh055 hh070 hh070 hh073 hh070 hh074
hh074 hh056 hh035 hh034 hh070 hh070 hh070 hh149
hh071 hh070 hh027 hh048 hh149
hh027 hh048 hh070 hh072 hh149
hh085 hh082 hh048 hh062 hh071
hh071 hh082 hh070 hh071 hh080 hh071
hh042 hh058 hh038 hh070 hh072 hh149 hh070
hh070 hh070 hh072 hh074 hh071 hh071 hh111
hh030 hh050 hh149 hh072 hh071 hh073
hh070 hh042 hh058 hh038 hh073
hh071 hh071 hh070 hh070 hh070
hh070 hh070 hh070 hh071 hh078
hh075 hh072 hh070 hh042 hh058 hh038 hh070
hh070 hh076 hh070 hh071 hh070 hh070 hh070 hh074
hh071 hh075 hh035 hh057 hh038 hh074
hh070 hh071 hh070 hh087 hh071 hh072
hh071 hh070 hh070 hh070 hh079 hh070
hh070 hh030 hh050 hh149 hh070
hh079 hh112 hh080 hh070 hh070 hh072 hh070
hh071 hh097 hh041 hh055 hh073 hh070 hh070
hh071 hh041 hh058 hh071 hh076 hh072 hh070 hh070
hh149 hh070 hh070 hh149 hh070 hh072 hh072 hh149
hh070 hh073 hh070 hh070 hh099 hh070 hh024 hh054
hh039 hh026 hh054 hh070 hh071 hh071 hh070
hh071 hh080 hh030 hh050 hh070 hh070 hh070
hh079 hh071 hh073 hh034 hh037 hh060 hh071 hh070 hh070
hh064 hh056 hh070 hh070 hh070
hh080 hh043 hh037 hh099 hh073 hh088 hh070
hh024 hh054 hh070 hh070 hh070 hh073 hh074
hh070 hh070 hh070 hh070 hh041 hh055 hh070 hh080
hh071 hh070 hh072 hh072 hh116 hh070
hh070 hh149 hh027 hh062 hh040 hh075
hh074 hh082 hh079 hh149 hh061 hh044 hh065
hh070 hh074 hh088 hh070 hh071 hh073 hh116 hh070
hh072 hh030 hh050 hh081 hh070 hh071
hh030 hh050 hh070 hh070 hh080
hh072 hh070 hh073 hh072 hh070 hh076 hh088 hh070 hh073
hh061 hh044 hh065 hh070 hh070
hh070 hh119 hh070 hh070 hh071 hh072 hh039 hh026 hh054
hh070 hh070 hh071 hh064 hh056 hh070 hh072
hh043 hh037 hh077 hh149 hh090 hh081
hh053 hh062 hh070 hh086 hh076
hh097 hh074 hh070 hh070 hh070 hh073 hh087 hh070 hh071
hh070 hh070 hh070 hh070 hh072 hh124
hh074 hh070 hh071 hh070 hh121 hh027 hh062 hh040 hh082
hh070 hh136 hh041 hh058 hh139
hh070 hh027 hh062 hh040 hh070 hh149 hh149
hh149 hh072 hh070 hh071 hh100
hh103 hh071 hh075 hh149 hh114 hh070 hh070
hh084 hh079 hh070 hh070 hh070 hh138
hh084 hh070 hh116 hh071 hh073 hh149 hh070 hh082
hh120 hh072 hh070 hh071 hh070 hh149 hh120 hh071 hh070
hh070 hh070 hh108 hh071 hh070 hh056 hh035 hh034
hh071 hh070 hh070 hh070 hh071 hh048 hh062 hh070
hh070 hh149 hh070 hh071 hh073
hh071 hh070 hh070 hh070 hh074
hh071 hh070 hh100 hh072 hh077 hh070 hh149 hh070
hh149 hh072 hh072 hh075 hh070 hh070 hh070
hh075 hh070 hh070 hh082 hh070 hh079 hh149
hh070 hh070 hh070 hh149 hh077 hh071 hh070
hh042 hh058 hh038 hh070 hh070
hh071 hh065 hh047 hh040 hh070
hh027 hh062 hh040 hh070 hh070 hh080 hh070 hh073 hh072
hh070 hh072 hh024 hh054 hh070 hh078
hh070 hh070 hh070 hh024 hh054 hh079 hh119 hh070 hh070
hh034 hh037 hh060 hh070 hh070 hh070
hh075 hh070 hh072 hh070 hh071 hh070 hh149 hh072 hh077
hh070 hh071 hh070 hh070 hh072 hh027 hh048 hh070 hh070
hh070 hh070 hh149 hh070 hh070 hh149 hh070 hh071 hh072
hh072 hh119 hh077 hh072 hh070 hh071 hh093 hh070 hh075
hh078 hh089 hh070 hh072 hh071 hh070
hh070 hh070 hh149 hh073 hh136 hh071 hh071
hh074 hh070 hh082 hh065 hh047 hh040 hh070 hh070
hh071 hh149 hh071 hh071 hh070 hh065 hh047 hh040
hh071 hh071 hh070 hh092 hh074 hh070 hh070 hh072
hh149 hh070 hh070 hh070 hh071 hh071 hh072 hh070 hh073
hh070 hh078 hh071 hh070 hh070
hh024 hh054 hh070 hh073 hh082
hh070 hh071 hh070 hh070 hh070 hh089 hh070 hh070 hh070
hh109 hh071 hh071 hh072 hh149 hh071 hh070 hh070 hh085
hh070 hh070 hh070 hh096 hh072 hh074
hh070 hh093 hh070 hh081 hh072 hh070 hh073 hh024 hh054
hh071 hh042 hh058 hh038 hh070 hh075 hh071 hh093
hh041 hh058 hh072 hh074 hh070 hh073 hh081 hh071 hh080
hh070 hh073 hh071 hh071 hh070
hh089 hh070 hh071 hh064 hh056 hh079
