hh149 hh074 hh071 hh072 hh077
hh070 hh027 hh062 hh040 hh070 hh149 hh074 hh070
hh070 hh072 hh027 hh062 hh040 hh074 hh070
hh070 hh072 hh070 hh070 hh078 hh078
hh070 hh106 hh034 hh037 hh060
hh070 hh070 hh034 hh037 hh060
hh071 hh071 hh072 hh070 hh074
hh071 hh070 hh070 hh070 hh070 hh070 hh070
hh070 hh070 hh070 hh070 hh070 hh070 hh149 hh070
hh070 hh072 hh075 hh070 hh070 hh070 hh071
hh070 hh024 hh054 hh070 hh070 hh070 hh149 hh113 hh070
hh096 hh070 hh041 hh055 hh071 hh070
hh081 hh073 hh070 hh056 hh035 hh034 hh070 hh071 hh070
hh071 hh070 hh149 hh076 hh070 hh149 hh070
hh076 hh071 hh070 hh070 hh070 hh072 hh149
hh079 hh075 hh048 hh062 hh073 hh074 hh070 hh071
hh149 hh084 hh071 hh070 hh071 hh070 hh070 hh121
hh070 hh072 hh030 hh050 hh071
hh070 hh071 hh103 hh072 hh077 hh070 hh070
hh071 hh070 hh070 hh070 hh070 hh071 hh070
hh074 hh070 hh070 hh056 hh035 hh034
hh149 hh071 hh043 hh037 hh070 hh071 hh149 hh149
hh072 hh149 hh084 hh070 hh077
hh071 hh071 hh071 hh117 hh137 hh070 hh070
hh070 hh061 hh044 hh065 hh079 hh071 hh070
hh070 hh070 hh070 hh070 hh072 hh070 hh070
hh083 hh070 hh149 hh070 hh070 hh074 hh099 hh074 hh071
hh070 hh048 hh062 hh070 hh070 hh071 hh084
hh042 hh058 hh038 hh070 hh070 hh077 hh070
hh070 hh076 hh070 hh071 hh071 hh070 hh074 hh074 hh070
hh074 hh072 hh071 hh070 hh071 hh070
hh073 hh149 hh149 hh070 hh056 hh035 hh034
hh070 hh083 hh072 hh043 hh037
hh070 hh070 hh132 hh081 hh070 hh070 hh072 hh072 hh070
hh073 hh041 hh058 hh072 hh070 hh080
hh070 hh070 hh070 hh041 hh058 hh070 hh072
hh070 hh149 hh070 hh070 hh070 hh082
hh065 hh047 hh040 hh070 hh071
hh048 hh062 hh071 hh070 hh084 hh071 hh071 hh070
hh042 hh058 hh038 hh070 hh072 hh105 hh096 hh070
hh070 hh115 hh107 hh070 hh078 hh070 hh071
hh089 hh070 hh070 hh070 hh081 hh070 hh070
hh087 hh048 hh062 hh072 hh109
hh149 hh071 hh070 hh073 hh071 hh070 hh072 hh070
hh070 hh149 hh070 hh065 hh047 hh040
hh072 hh070 hh070 hh075 hh077
hh070 hh070 hh071 hh070 hh071
hh070 hh061 hh044 hh065 hh070 hh070 hh083 hh149
hh074 hh078 hh149 hh073 hh092
hh149 hh070 hh070 hh149 hh072 hh073 hh073 hh070 hh070
hh070 hh070 hh074 hh056 hh035 hh034 hh070
hh070 hh071 hh070 hh071 hh106 hh064 hh056
hh070 hh070 hh065 hh047 hh040
hh070 hh070 hh041 hh055 hh070 hh074 hh092 hh074 hh080
hh075 hh081 hh079 hh097 hh078 hh091 hh070 hh083 hh072
hh041 hh058 hh071 hh071 hh070 hh071 hh070
hh086 hh070 hh070 hh070 hh070 hh073 hh070 hh081
hh144 hh097 hh027 hh062 hh040 hh079 hh075 hh074
hh071 hh070 hh070 hh071 hh070 hh073 hh072
hh070 hh072 hh056 hh035 hh034 hh071 hh071 hh070
hh070 hh149 hh039 hh026 hh054 hh070
hh071 hh077 hh072 hh078 hh074 hh070
hh075 hh070 hh070 hh073 hh074 hh071 hh071 hh089
hh073 hh149 hh070 hh030 hh050 hh070 hh072 hh070 hh077
hh100 hh070 hh070 hh071 hh070 hh071
hh071 hh071 hh043 hh037 hh070 hh085 hh072
hh078 hh074 hh070 hh079 hh072 hh073 hh070 hh070 hh071
hh070 hh061 hh044 hh065 hh070 hh070 hh074 hh070 hh079
hh061 hh044 hh065 hh075 hh070
hh070 hh070 hh072 hh070 hh071 hh070 hh071 hh070 hh149
hh071 hh042 hh058 hh038 hh070
hh087 hh117 hh071 hh070 hh070 hh056 hh035 hh034 hh149
hh070 hh149 hh039 hh026 hh054 hh070
hh088 hh070 hh070 hh070 hh070 hh070 hh071
hh093 hh072 hh149 hh071 hh076 hh070 hh076 hh070 hh072
hh149 hh106 hh081 hh065 hh047 hh040 hh087
hh072 hh070 hh072 hh070 hh070 hh149
hh034 hh037 hh060 hh070 hh109 hh070
hh073 hh070 hh070 hh071 hh070 hh078
hh070 hh034 hh037 hh060 hh072 hh070 hh070
hh070 hh072 hh070 hh070 hh072 hh034 hh037 hh060 hh070
hh070 hh083 hh070 hh070 hh070
hh084 hh070 hh084 hh042 hh058 hh038 hh072 hh095 hh073
hh070 hh070 hh070 hh071 hh073 hh075
hh071 hh042 hh058 hh038 hh070 hh070
hh073 hh090 hh072 hh081 hh080 hh071
hh149 hh042 hh058 hh038 hh070 hh071 hh070 hh070
hh064 hh056 hh075 hh074 hh071
hh070 hh070 hh070 hh070 hh149 hh073 hh064 hh056
hh142 hh070 hh070 hh070 hh073 hh070 hh071 hh072 hh070
hh027 hh062 hh040 hh071 hh071 hh070 hh089 hh071
hh074 hh079 hh076 hh041 hh055 hh073 hh070 hh070 hh070
hh056 hh035 hh034 hh071 hh077 hh070
hh071 hh070 hh079 hh070 hh072 hh070 hh041 hh055
hh077 hh072 hh073 hh064 hh056 hh085 hh070 hh078
hh080 hh070 hh065 hh047 hh040
hh092 hh149 hh071 hh065 hh047 hh040 hh070
hh071 hh131 hh077 hh070 hh070
hh070 hh072 hh076 hh070 hh073 hh085 hh070 hh077
hh070 hh070 hh149 hh070 hh070 hh071 hh070 hh070
hh106 hh070 hh149 hh072 hh149 hh070 hh078
hh070 hh070 hh070 hh072 hh075 hh070 hh071 hh072
hh072 hh070 hh070 hh070 hh073 hh070
hh070 hh076 hh072 hh070 hh070 hh072 hh149 hh071 hh070
hh071 hh070 hh030 hh050 hh101 hh070 hh070
hh070 hh071 hh070 hh077 hh070 hh070
hh149 hh070 hh056 hh035 hh034 hh078
hh086 hh071 hh077 hh072 hh071 hh070
hh078 hh070 hh072 hh070 hh072 hh071
hh070 hh024 hh054 hh070 hh071
hh114 hh071 hh070 hh072 hh070
hh073 hh072 hh076 hh076 hh070 hh070
hh039 hh026 hh054 hh083 hh070 hh070 hh072 hh130
hh078 hh072 hh071 hh074 hh071
hh070 hh070 hh149 hh074 hh043 hh037 hh072
hh076 hh079 hh070 hh070 hh070
hh072 hh076 hh078 hh084 hh048 hh062 hh074
hh091 hh074 hh149 hh077 hh080 hh070
hh147 hh071 hh024 hh054 hh149 hh071 hh070 hh072 hh070
hh071 hh070 hh077 hh073 hh089
hh070 hh109 hh070 hh106 hh077 hh070 hh070
hh079 hh070 hh074 hh077 hh149 hh081 hh070 hh071
hh070 hh079 hh030 hh050 hh072 hh070
hh093 hh071 hh070 hh070 hh085 hh070
hh070 hh149 hh070 hh071 hh070 hh086
hh070 hh146 hh070 hh070 hh075 hh070
hh070 hh149 hh072 hh030 hh050
hh070 hh070 hh034 hh037 hh060 hh071 hh071 hh070
hh070 hh072 hh149 hh070 hh071 hh072
hh079 hh149 hh073 hh070 hh070
hh070 hh056 hh035 hh034 hh071 hh078
hh056 hh035 hh034 hh149 hh077 hh070 hh072
hh039 hh026 hh054 hh102 hh070 hh070 hh142
hh149 hh072 hh071 hh070 hh027 hh062 hh040 hh070
hh094 hh070 hh074 hh072 hh070 hh070 hh149
hh070 hh048 hh062 hh073 hh073 hh070
hh149 hh070 hh103 hh070 hh070 hh039 hh026 hh054
hh072 hh070 hh073 hh080 hh072 hh070 hh072
hh105 hh149 hh071 hh089 hh076 hh149 hh070 hh088
hh071 hh070 hh070 hh070 hh070 hh065 hh047 hh040
hh149 hh070 hh070 hh070 hh099 hh071 hh073 hh070
hh030 hh050 hh087 hh076 hh086
hh080 hh070 hh056 hh035 hh034 hh070 hh071
hh077 hh071 hh070 hh070 hh070
hh070 hh071 hh149 hh070 hh073 hh070
hh072 hh071 hh070 hh064 hh056 hh075 hh070 hh070
hh149 hh035 hh057 hh038 hh083
hh030 hh050 hh149 hh072 hh070 hh070 hh071 hh071 hh072
hh070 hh081 hh076 hh070 hh078 hh072 hh077 hh071 hh072
hh078 hh070 hh070 hh071 hh071 hh070 hh149
hh072 hh027 hh062 hh040 hh072 hh070 hh071 hh079 hh070
hh070 hh078 hh072 hh070 hh070 hh074
hh070 hh149 hh071 hh061 hh044 hh065 hh071 hh070
hh080 hh070 hh070 hh070 hh073 hh070 hh149
hh070 hh070 hh075 hh027 hh048 hh071 hh073 hh072
hh048 hh062 hh073 hh089 hh149 hh070
hh071 hh149 hh081 hh070 hh070 hh073 hh070
hh070 hh071 hh039 hh026 hh054
hh091 hh075 hh070 hh070 hh070 hh070 hh072 hh072 hh070
hh070 hh070 hh070 hh093 hh070 hh074 hh075
hh070 hh073 hh149 hh070 hh070 hh072
hh071 hh149 hh070 hh070 hh073 hh071 hh089 hh071 hh070
hh075 hh070 hh072 hh071 hh077 hh070
hh136 hh070 hh027 hh062 hh040 hh070 hh082
hh070 hh070 hh121 hh074 hh073 hh090 hh070 hh064 hh056
hh075 hh092 hh071 hh042 hh058 hh038 hh070 hh070
hh072 hh070 hh073 hh090 hh099 hh070
hh070 hh070 hh123 hh070 hh070 hh070 hh064 hh056 hh071
hh070 hh075 hh056 hh035 hh034
hh072 hh072 hh070 hh074 hh070 hh070 hh149 hh024 hh054
hh035 hh057 hh038 hh072 hh070 hh070 hh071 hh077 hh070
hh070 hh072 hh070 hh073 hh048 hh062
hh027 hh062 hh040 hh076 hh083 hh070 hh071 hh071 hh070
hh070 hh088 hh071 hh034 hh037 hh060 hh075
hh127 hh071 hh043 hh037 hh074
hh073 hh070 hh071 hh073 hh070 hh149 hh070
hh071 hh071 hh070 hh070 hh073
hh070 hh081 hh071 hh070 hh076
hh133 hh087 hh074 hh061 hh044 hh065
hh039 hh026 hh054 hh070 hh070 hh071 hh071
hh070 hh070 hh027 hh048 hh072 hh070 hh070
hh072 hh070 hh070 hh070 hh035 hh057 hh038
hh071 hh122 hh071 hh070 hh101 hh071
hh073 hh118 hh072 hh073 hh090 hh104
hh070 hh070 hh073 hh070 hh076 hh070
hh075 hh070 hh070 hh074 hh070 hh074 hh070 hh070
hh070 hh070 hh070 hh149 hh071 hh072 hh070 hh074 hh082
hh104 hh079 hh070 hh071 hh090 hh070 hh071 hh073 hh071
hh075 hh071 hh070 hh072 hh071 hh070 hh109 hh118
hh073 hh071 hh070 hh070 hh149 hh079 hh070
hh061 hh044 hh065 hh070 hh072 hh070 hh070 hh071 hh072
hh070 hh080 hh070 hh070 hh075
hh070 hh034 hh037 hh060 hh070 hh072 hh089 hh081 hh074
hh076 hh071 hh070 hh073 hh080 hh070 hh073
hh070 hh070 hh078 hh070 hh070 hh070
hh039 hh026 hh054 hh070 hh070
hh035 hh057 hh038 hh073 hh070
hh128 hh070 hh070 hh034 hh037 hh060 hh075
hh070 hh073 hh070 hh076 hh070 hh149 hh149
hh070 hh109 hh070 hh070 hh073 hh070 hh093
hh071 hh071 hh092 hh070 hh041 hh055
hh070 hh072 hh149 hh048 hh062
hh043 hh037 hh071 hh070 hh078 hh070 hh070
hh070 hh070 hh070 hh078 hh070
hh071 hh070 hh087 hh064 hh056
hh070 hh077 hh149 hh072 hh070 hh110 hh070 hh024 hh054
hh073 hh071 hh072 hh070 hh077
hh070 hh100 hh078 hh070 hh070
hh070 hh074 hh073 hh084 hh070 hh070 hh076 hh071 hh076
hh070 hh070 hh071 hh070 hh073 hh070
hh073 hh070 hh070 hh074 hh079 hh070 hh070
hh070 hh071 hh070 hh077 hh072 hh070 hh076 hh074 hh070
hh070 hh071 hh077 hh070 hh070 hh145
hh070 hh070 hh070 hh034 hh037 hh060
hh070 hh126 hh070 hh070 hh074 hh072 hh071
hh070 hh070 hh070 hh072 hh072 hh072 hh077 hh070
hh149 hh070 hh070 hh070 hh072 hh089 hh078 hh070
hh073 hh072 hh070 hh072 hh072
hh149 hh070 hh048 hh062 hh071 hh094 hh072
hh071 hh071 hh071 hh084 hh070 hh071 hh149
hh070 hh070 hh070 hh070 hh072 hh070 hh075
hh070 hh149 hh070 hh096 hh106 hh071 hh070
hh070 hh070 hh071 hh070 hh072
hh076 hh095 hh078 hh070 hh070 hh077
hh071 hh086 hh071 hh070 hh070 hh149 hh071 hh072 hh149
hh070 hh072 hh071 hh077 hh073
hh070 hh073 hh027 hh062 hh040 hh149
hh070 hh074 hh070 hh070 hh071 hh071 hh072 hh071
hh092 hh074 hh053 hh062 hh070
hh070 hh075 hh072 hh070 hh070 hh076
hh070 hh071 hh079 hh071 hh070 hh071
hh073 hh070 hh039 hh026 hh054 hh070 hh092 hh070 hh070
hh074 hh071 hh071 hh041 hh055
hh070 hh070 hh072 hh070 hh149 hh041 hh055 hh070
hh071 hh053 hh062 hh077 hh149 hh071 hh070
hh070 hh071 hh076 hh073 hh071 hh053 hh062 hh070 hh070
hh072 hh070 hh071 hh071 hh074 hh070 hh070 hh070
hh071 hh070 hh149 hh070 hh130
hh089 hh070 hh085 hh070 hh075 hh070 hh071
hh070 hh070 hh070 hh070 hh070
hh078 hh048 hh062 hh070 hh070 hh070
hh070 hh149 hh070 hh072 hh070 hh070 hh070 hh070 hh075
hh070 hh094 hh073 hh091 hh070 hh070 hh132 hh102
hh070 hh071 hh070 hh027 hh048
hh080 hh149 hh070 hh041 hh058 hh073 hh081 hh099 hh070
hh133 hh082 hh070 hh074 hh070 hh092 hh149 hh149
hh071 hh070 hh073 hh072 hh077 hh070 hh071 hh070 hh071
hh082 hh071 hh149 hh070 hh075 hh070
hh070 hh072 hh083 hh070 hh079
hh071 hh071 hh070 hh149 hh070 hh070
hh070 hh064 hh056 hh071 hh070
hh072 hh030 hh050 hh071 hh070 hh085
hh070 hh070 hh070 hh070 hh076
hh070 hh070 hh070 hh024 hh054
hh149 hh084 hh070 hh070 hh113 hh149 hh149 hh070
hh070 hh070 hh070 hh070 hh149
hh070 hh095 hh075 hh070 hh053 hh062 hh070 hh071 hh070
hh073 hh070 hh035 hh057 hh038 hh122
hh072 hh071 hh041 hh055 hh074 hh078 hh070
hh070 hh149 hh056 hh035 hh034
hh027 hh048 hh082 hh072 hh071 hh072 hh071 hh070 hh070
hh071 hh043 hh037 hh070 hh092
hh139 hh100 hh070 hh070 hh070
hh099 hh027 hh062 hh040 hh080 hh071
hh072 hh070 hh041 hh058 hh070 hh149
hh071 hh070 hh079 hh074 hh070 hh070 hh041 hh058 hh073
hh073 hh070 hh145 hh077 hh070 hh070 hh070 hh070
hh070 hh070 hh093 hh080 hh082 hh073 hh041 hh055 hh070
hh075 hh081 hh070 hh071 hh070 hh070
hh042 hh058 hh038 hh071 hh070 hh070 hh070 hh070 hh071
hh070 hh086 hh072 hh074 hh056 hh035 hh034
hh070 hh083 hh071 hh070 hh070 hh077
hh071 hh096 hh095 hh070 hh080 hh149
hh087 hh070 hh070 hh070 hh070 hh073 hh071
hh087 hh071 hh149 hh070 hh072 hh041 hh055
hh078 hh053 hh062 hh070 hh131 hh070
hh070 hh071 hh070 hh081 hh070
hh096 hh076 hh070 hh075 hh107 hh070
hh075 hh072 hh070 hh070 hh070 hh072 hh072 hh071
hh070 hh056 hh035 hh034 hh070 hh070 hh070 hh149
