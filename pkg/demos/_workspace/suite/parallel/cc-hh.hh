hh149 hh075 hh027 hh048 hh071 hh088 hh070 hh070
hh085 hh077 hh027 hh048 hh088 hh070
hh084 hh103 hh105 hh077 hh149
hh079 hh070 hh070 hh070 hh115 hh101
hh079 hh070 hh124 hh125 hh078 hh070 hh071
hh072 hh124 hh125 hh070 hh070 hh072
hh070 hh070 hh081 hh077 hh070 hh075 hh070 hh070 hh070
hh071 hh081 hh072 hh071 hh079 hh070 hh071 hh070 hh088
hh070 hh071 hh070 hh074 hh074 hh072
hh070 hh071 hh077 hh071 hh079 hh070
hh070 hh074 hh149 hh076 hh070 hh070 hh074 hh070
hh149 hh115 hh101 hh071 hh073 hh070 hh070
hh076 hh072 hh071 hh124 hh125 hh072 hh070
hh115 hh101 hh070 hh077 hh070 hh071
hh076 hh070 hh071 hh070 hh149 hh082 hh071 hh070
hh083 hh113 hh135 hh070 hh074 hh080 hh070
hh071 hh071 hh070 hh071 hh093
hh071 hh128 hh121 hh112 hh071
hh070 hh113 hh135 hh087 hh070 hh070 hh073
hh084 hh076 hh070 hh101 hh071 hh071 hh071
hh071 hh070 hh070 hh072 hh075 hh092 hh087 hh070
hh115 hh101 hh070 hh070 hh073 hh073 hh071
hh072 hh071 hh070 hh071 hh076 hh070 hh072 hh073
hh072 hh149 hh070 hh113 hh135 hh070 hh070
hh128 hh121 hh070 hh071 hh070 hh070 hh071 hh070 hh081
hh070 hh072 hh070 hh074 hh071 hh070 hh070 hh072
hh091 hh071 hh124 hh125 hh070
hh071 hh105 hh070 hh070 hh124 hh125 hh070 hh071
hh149 hh070 hh113 hh135 hh071 hh070 hh070 hh077 hh149
hh071 hh081 hh072 hh070 hh070
hh149 hh070 hh070 hh072 hh109 hh070 hh071 hh074
hh124 hh125 hh070 hh070 hh070
hh053 hh062 hh079 hh070 hh070 hh070
hh071 hh070 hh089 hh071 hh070 hh070 hh074
hh071 hh149 hh079 hh149 hh070 hh071
hh070 hh074 hh070 hh070 hh071 hh108 hh070 hh070 hh070
hh071 hh149 hh072 hh111 hh070 hh070 hh070 hh115 hh101
hh071 hh073 hh105 hh115 hh101 hh070 hh090
hh105 hh070 hh076 hh072 hh070
hh070 hh115 hh070 hh070 hh070
hh071 hh070 hh072 hh070 hh070 hh077
hh070 hh070 hh070 hh113 hh135 hh072 hh149 hh070
hh071 hh073 hh070 hh070 hh073 hh070
hh071 hh086 hh108 hh070 hh070 hh070 hh070 hh027 hh048
hh071 hh070 hh070 hh075 hh071 hh073 hh070 hh070
hh070 hh053 hh062 hh070 hh073 hh070
hh070 hh072 hh070 hh070 hh078 hh070 hh071 hh074 hh073
hh149 hh070 hh071 hh095 hh070
hh070 hh072 hh115 hh101 hh073 hh070
hh072 hh070 hh149 hh075 hh070 hh141 hh070 hh084
hh080 hh070 hh149 hh070 hh076 hh075 hh070
hh070 hh070 hh076 hh104 hh070 hh070
hh070 hh071 hh077 hh070 hh070 hh149 hh070 hh070 hh070
hh070 hh071 hh070 hh070 hh070 hh071
hh149 hh071 hh073 hh073 hh070 hh073 hh071
hh079 hh070 hh072 hh072 hh081 hh070 hh115 hh101
hh103 hh071 hh070 hh124 hh125
hh070 hh149 hh074 hh123 hh128 hh071 hh071 hh070
hh070 hh115 hh101 hh076 hh070 hh070 hh070
hh070 hh070 hh103 hh105 hh074 hh070
hh073 hh070 hh071 hh070 hh085
hh149 hh071 hh070 hh070 hh070 hh072 hh070
hh070 hh070 hh115 hh101 hh070 hh144
hh078 hh070 hh027 hh048 hh072 hh072
hh074 hh072 hh149 hh070 hh070 hh070 hh070 hh073 hh075
hh077 hh124 hh125 hh071 hh073 hh082
hh070 hh070 hh073 hh070 hh079
hh070 hh115 hh101 hh071 hh070 hh070 hh070
hh070 hh072 hh076 hh113 hh135
hh070 hh149 hh070 hh094 hh071 hh070 hh070 hh073 hh071
hh073 hh072 hh071 hh081 hh071 hh070 hh070 hh071
hh070 hh070 hh070 hh113 hh135
hh073 hh070 hh070 hh070 hh075 hh070
hh070 hh076 hh071 hh070 hh072 hh070 hh074 hh070 hh070
hh071 hh070 hh070 hh071 hh074 hh070 hh070 hh073 hh072
hh070 hh070 hh077 hh075 hh123 hh128
hh080 hh079 hh078 hh070 hh070 hh072
hh071 hh077 hh071 hh027 hh048 hh071
hh070 hh124 hh125 hh079 hh070
hh070 hh103 hh105 hh072 hh078
hh070 hh149 hh102 hh070 hh073 hh070 hh071
hh070 hh070 hh071 hh070 hh134 hh070 hh070
hh070 hh071 hh081 hh072 hh078 hh079 hh070 hh070
hh149 hh070 hh070 hh073 hh071
hh071 hh071 hh070 hh149 hh070
hh070 hh070 hh070 hh123 hh128
hh083 hh070 hh071 hh073 hh092 hh070 hh070 hh070 hh071
hh070 hh115 hh101 hh093 hh070
hh071 hh071 hh078 hh073 hh070 hh071 hh076 hh070 hh070
hh070 hh102 hh071 hh071 hh071
hh070 hh070 hh072 hh070 hh124 hh125 hh075 hh070 hh072
hh070 hh103 hh105 hh110 hh149
hh071 hh070 hh070 hh077 hh071 hh070
hh103 hh105 hh071 hh086 hh101 hh070 hh072 hh070 hh070
hh070 hh075 hh070 hh071 hh073 hh071
hh072 hh070 hh071 hh117 hh070 hh071
hh071 hh070 hh070 hh070 hh071 hh072 hh070 hh084 hh070
hh070 hh070 hh071 hh070 hh070 hh070
hh107 hh070 hh071 hh027 hh048 hh070 hh149 hh079
hh070 hh096 hh072 hh070 hh072
hh072 hh071 hh071 hh072 hh070
hh070 hh070 hh070 hh071 hh070
hh070 hh072 hh076 hh082 hh072 hh071 hh078 hh071
hh070 hh070 hh077 hh103 hh105
hh071 hh070 hh071 hh074 hh070 hh103 hh105
hh070 hh074 hh070 hh070 hh070 hh070 hh124 hh125
hh072 hh070 hh079 hh072 hh070 hh070
hh074 hh105 hh070 hh070 hh070 hh070
hh070 hh075 hh070 hh070 hh071 hh053 hh062 hh070 hh070
hh071 hh103 hh105 hh081 hh070 hh083 hh070 hh073
hh079 hh103 hh105 hh070 hh074
hh113 hh135 hh070 hh071 hh070 hh070 hh149 hh070 hh070
hh070 hh149 hh027 hh048 hh074 hh072 hh093 hh097 hh070
hh070 hh070 hh071 hh070 hh078 hh128 hh121
hh072 hh070 hh070 hh149 hh072 hh070 hh070 hh074
hh070 hh149 hh070 hh087 hh070 hh123 hh128
hh078 hh070 hh080 hh070 hh070
hh070 hh070 hh082 hh070 hh070 hh071
hh149 hh124 hh125 hh070 hh070 hh070
hh070 hh070 hh070 hh070 hh128 hh121
hh070 hh071 hh113 hh135 hh083
hh070 hh070 hh115 hh072 hh149 hh070 hh124 hh125 hh070
hh083 hh113 hh071 hh113 hh135
hh070 hh070 hh071 hh070 hh071 hh073 hh070 hh070 hh073
hh070 hh080 hh070 hh073 hh070 hh088 hh078 hh070 hh070
hh070 hh070 hh149 hh128 hh121 hh149 hh071
hh074 hh070 hh070 hh081 hh149 hh070 hh071 hh070 hh070
hh149 hh071 hh070 hh071 hh071 hh072 hh149 hh070 hh070
hh073 hh071 hh079 hh088 hh080 hh070 hh070 hh123 hh128
hh071 hh113 hh135 hh074 hh070
hh070 hh124 hh125 hh070 hh082 hh112 hh070
hh102 hh080 hh070 hh070 hh149 hh070 hh071
hh079 hh070 hh070 hh070 hh070
hh075 hh073 hh074 hh070 hh070 hh071
hh070 hh074 hh070 hh128 hh121
hh070 hh071 hh107 hh070 hh113 hh135
hh070 hh070 hh070 hh081 hh149 hh105 hh075
hh070 hh077 hh070 hh027 hh048 hh070
hh053 hh062 hh071 hh070 hh071 hh071 hh072
hh103 hh105 hh070 hh070 hh070
hh070 hh070 hh074 hh073 hh071 hh071 hh070 hh075
hh090 hh149 hh056 hh035 hh034 hh070 hh149
hh070 hh070 hh073 hh095 hh070
hh073 hh073 hh070 hh070 hh061 hh044 hh065 hh071
hh070 hh074 hh084 hh027 hh048 hh073
hh070 hh070 hh070 hh048 hh062 hh071 hh071 hh070
hh070 hh070 hh035 hh057 hh038
hh042 hh058 hh038 hh071 hh070 hh099 hh071 hh070
hh039 hh026 hh054 hh070 hh070 hh077 hh070 hh070 hh070
hh034 hh037 hh060 hh071 hh070 hh071 hh070 hh070
hh070 hh071 hh072 hh072 hh071 hh072 hh070
hh030 hh050 hh149 hh070 hh071
hh071 hh071 hh073 hh075 hh071 hh024 hh054
hh076 hh071 hh071 hh070 hh065 hh047 hh040
hh074 hh070 hh070 hh070 hh149 hh071 hh107
hh086 hh116 hh034 hh037 hh060 hh090 hh070 hh072
hh070 hh101 hh070 hh072 hh071
hh070 hh070 hh071 hh053 hh062 hh071 hh149 hh071 hh071
hh090 hh070 hh125 hh076 hh061 hh044 hh065 hh070 hh094
hh070 hh094 hh070 hh065 hh047 hh040 hh078
hh074 hh070 hh070 hh070 hh072 hh056 hh035 hh034 hh072
hh070 hh078 hh071 hh077 hh073 hh070
hh072 hh070 hh024 hh054 hh141 hh071
hh073 hh123 hh070 hh071 hh149 hh072 hh070 hh071 hh070
hh072 hh071 hh093 hh061 hh044 hh065 hh076
hh070 hh076 hh070 hh070 hh076 hh071 hh074 hh072 hh070
hh149 hh072 hh083 hh070 hh078
hh065 hh047 hh040 hh070 hh070
hh070 hh074 hh048 hh062 hh073 hh073 hh148 hh077 hh072
hh071 hh072 hh073 hh070 hh075 hh127 hh074
hh070 hh070 hh073 hh072 hh070 hh071 hh113 hh071
hh072 hh149 hh074 hh070 hh070 hh097 hh070 hh070 hh070
hh070 hh072 hh070 hh070 hh073 hh070 hh071
hh084 hh070 hh073 hh072 hh093 hh073
hh071 hh077 hh070 hh056 hh035 hh034
hh072 hh070 hh070 hh071 hh076 hh071
hh070 hh024 hh054 hh070 hh070 hh071
hh041 hh058 hh094 hh074 hh070 hh071 hh149 hh070 hh070
hh070 hh070 hh070 hh072 hh070 hh144 hh074 hh070 hh070
hh070 hh074 hh071 hh074 hh071 hh149
hh070 hh064 hh056 hh071 hh070 hh077
hh071 hh070 hh070 hh113 hh070 hh070 hh064 hh056 hh070
hh070 hh071 hh070 hh070 hh074 hh070 hh070 hh074
hh070 hh074 hh072 hh070 hh070 hh053 hh062 hh125
hh076 hh070 hh070 hh070 hh053 hh062 hh070
hh070 hh073 hh070 hh149 hh071 hh149 hh070 hh070 hh070
hh074 hh042 hh058 hh038 hh070 hh075 hh149 hh070
hh070 hh071 hh070 hh070 hh070 hh027 hh062 hh040 hh070
hh073 hh070 hh074 hh072 hh053 hh062 hh070 hh070 hh071
hh071 hh070 hh072 hh065 hh047 hh040 hh070
hh071 hh071 hh070 hh073 hh076 hh070 hh072
hh070 hh149 hh085 hh070 hh070
hh072 hh070 hh070 hh083 hh061 hh044 hh065
hh149 hh090 hh042 hh058 hh038 hh075 hh071 hh070
hh070 hh070 hh034 hh037 hh060
hh070 hh071 hh030 hh050 hh071 hh071
hh077 hh124 hh082 hh071 hh081 hh070
hh070 hh048 hh062 hh072 hh072 hh099 hh070 hh101 hh070
hh042 hh058 hh038 hh070 hh070 hh070 hh070
hh070 hh071 hh072 hh042 hh058 hh038
hh070 hh070 hh075 hh072 hh070 hh071 hh070 hh072
hh075 hh027 hh062 hh040 hh071 hh070 hh071
hh070 hh081 hh064 hh056 hh071 hh074 hh071 hh071
hh070 hh076 hh070 hh070 hh073
hh071 hh070 hh120 hh070 hh071 hh070 hh074 hh073
hh076 hh070 hh106 hh071 hh072 hh073
hh070 hh071 hh070 hh070 hh074
hh070 hh084 hh061 hh044 hh065
hh149 hh077 hh070 hh072 hh071
hh083 hh070 hh074 hh070 hh070 hh081 hh070
hh071 hh071 hh149 hh070 hh070 hh079 hh072 hh071
hh100 hh070 hh070 hh042 hh058 hh038 hh070 hh073
hh070 hh070 hh072 hh070 hh070 hh027 hh062 hh040 hh070
hh149 hh071 hh070 hh070 hh048 hh062 hh072 hh072 hh070
hh070 hh070 hh070 hh071 hh070 hh071 hh030 hh050
hh149 hh110 hh070 hh075 hh070 hh077 hh104 hh084
hh093 hh070 hh070 hh071 hh070 hh071 hh070 hh075
hh030 hh050 hh147 hh070 hh070 hh070 hh074 hh072
hh076 hh070 hh071 hh071 hh083 hh072
hh070 hh071 hh070 hh097 hh071 hh070 hh071 hh130 hh070
hh061 hh044 hh065 hh070 hh070 hh070 hh071
hh070 hh070 hh141 hh096 hh070 hh073 hh070 hh072
hh041 hh058 hh070 hh073 hh073 hh070 hh070 hh139 hh080
hh070 hh071 hh070 hh081 hh070 hh070 hh070 hh071
hh134 hh072 hh070 hh070 hh070 hh070 hh073 hh071 hh076
hh061 hh044 hh065 hh070 hh070 hh071 hh076
hh072 hh071 hh070 hh070 hh072 hh072
hh072 hh073 hh070 hh070 hh080 hh071
hh072 hh024 hh054 hh071 hh071 hh076
hh070 hh075 hh039 hh026 hh054 hh096
hh149 hh070 hh118 hh073 hh030 hh050
hh071 hh070 hh078 hh070 hh072 hh039 hh026 hh054
hh064 hh056 hh071 hh074 hh070 hh070 hh075 hh073
hh070 hh149 hh070 hh070 hh070 hh100 hh070 hh071
hh053 hh062 hh070 hh073 hh070 hh098 hh077
hh070 hh070 hh027 hh048 hh070 hh070 hh070 hh079 hh070
hh149 hh072 hh070 hh070 hh072 hh070 hh077 hh072 hh072
hh076 hh070 hh078 hh131 hh070 hh071 hh070
hh070 hh071 hh070 hh043 hh037 hh091 hh070 hh074
hh070 hh035 hh057 hh038 hh070 hh077 hh070 hh070
hh070 hh149 hh030 hh050 hh070
hh149 hh072 hh070 hh071 hh072 hh086 hh073 hh073 hh070
hh072 hh073 hh043 hh037 hh070 hh070 hh076
hh034 hh037 hh060 hh148 hh070
hh070 hh070 hh073 hh071 hh116 hh027 hh062 hh040
hh072 hh070 hh072 hh070 hh070 hh070 hh070 hh072 hh149
hh077 hh070 hh071 hh070 hh070 hh070 hh070
hh024 hh054 hh149 hh070 hh074 hh100 hh070
hh090 hh070 hh074 hh072 hh071 hh071 hh070 hh070
hh041 hh055 hh072 hh070 hh071 hh079 hh079 hh070
hh114 hh070 hh072 hh076 hh083 hh075 hh070
hh070 hh130 hh077 hh075 hh072 hh080
hh070 hh078 hh070 hh120 hh030 hh050 hh080
hh070 hh076 hh070 hh065 hh047 hh040 hh070
hh074 hh070 hh079 hh073 hh061 hh044 hh065 hh101
hh073 hh112 hh061 hh044 hh065
hh070 hh073 hh101 hh056 hh035 hh034 hh070
hh072 hh027 hh062 hh040 hh149 hh070 hh074 hh072
hh074 hh071 hh071 hh072 hh043 hh037 hh070 hh072 hh091
hh072 hh071 hh072 hh070 hh074 hh070 hh075
hh107 hh070 hh070 hh071 hh087 hh070 hh070
hh071 hh125 hh071 hh070 hh119 hh034 hh037 hh060
hh071 hh117 hh072 hh070 hh073
hh079 hh073 hh070 hh078 hh073 hh072 hh071 hh070 hh087
hh071 hh035 hh057 hh038 hh070
hh073 hh132 hh100 hh070 hh070 hh073 hh081
hh070 hh070 hh071 hh070 hh073 hh071 hh041 hh058
hh070 hh071 hh135 hh070 hh073 hh081 hh077
hh071 hh071 hh034 hh037 hh060 hh070
hh070 hh070 hh076 hh070 hh072 hh112
hh072 hh070 hh070 hh149 hh070 hh075 hh070 hh070 hh070
hh074 hh071 hh070 hh070 hh070
hh027 hh048 hh070 hh070 hh070
hh053 hh062 hh072 hh073 hh070 hh149 hh071 hh072 hh070
hh076 hh070 hh070 hh030 hh050
hh070 hh070 hh085 hh149 hh070 hh072
hh041 hh058 hh149 hh071 hh070 hh070 hh084 hh072
hh073 hh087 hh070 hh074 hh070 hh070 hh070
hh073 hh071 hh070 hh071 hh070 hh070 hh112
hh070 hh070 hh070 hh070 hh070
